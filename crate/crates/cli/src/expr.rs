//! Parsing element expressions such as `1/6 abcd^2e - 1/12 e^3` or `2*a*b*d`.
//!
//! ```text
//! element  := ['+'|'-'] term (('+'|'-') term)*
//! term     := rational ['*'] monomial | rational | monomial
//! rational := int ['/' int]
//! monomial := factor (['*'] factor)*
//! factor   := letter ['^' uint]
//! ```
//!
//! `−` (U+2212) is accepted as a minus sign. Letters inside a monomial must be
//! strictly increasing: `ba` is not `ab` in a noncommutative algebra, so it is
//! rejected rather than silently reordered.

use std::fmt;

use malcev_core::{Letter, PBWMonomial, Rational, UElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

pub const ORDER_ERROR: &str = "monomial letters must be in order a..e";

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset,
            message: message.into(),
        })
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek()? {
            '+' => {
                self.bump();
                Some(false)
            }
            '-' | '−' => {
                self.bump();
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        &self.src[start..self.pos]
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let start = self.pos;
        self.digits();
        if self.peek() == Some('/') {
            self.bump();
            let den_at = self.pos;
            if self.digits().is_empty() {
                return self.error(den_at, "expected a denominator");
            }
        }
        let text = &self.src[start..self.pos];
        match text.parse::<Rational>() {
            Ok(r) => Ok(r),
            Err(_) => self.error(start, format!("invalid rational `{text}`")),
        }
    }

    fn factor(&mut self) -> Result<(Letter, u32), ParseError> {
        let at = self.pos;
        let letter = match self.peek().and_then(Letter::from_char) {
            Some(l) => l,
            None => return self.error(at, "expected a letter a..e"),
        };
        self.bump();
        let mut exp = 1;
        if self.peek() == Some('^') {
            self.bump();
            let digits_at = self.pos;
            let digits = self.digits();
            exp = match digits.parse::<u32>() {
                Ok(n) => n,
                Err(_) if digits.is_empty() => {
                    return self.error(digits_at, "expected an exponent")
                }
                Err(_) => {
                    return self.error(digits_at, format!("exponent `{digits}` is too large"))
                }
            };
        }
        Ok((letter, exp))
    }

    fn monomial(&mut self) -> Result<PBWMonomial, ParseError> {
        let mut exps = [0u32; 5];
        let mut last: Option<Letter> = None;
        loop {
            let at = self.pos;
            let (letter, exp) = self.factor()?;
            if last.is_some_and(|l| letter <= l) {
                return self.error(at, ORDER_ERROR);
            }
            last = Some(letter);
            exps[letter.index()] = exp;
            let before_star = self.pos;
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
                self.skip_ws();
                continue;
            }
            if self.peek().is_some_and(|c| Letter::from_char(c).is_some())
                && self.pos == before_star
            {
                continue;
            }
            self.pos = before_star;
            return Ok(PBWMonomial::new(exps));
        }
    }

    fn term(&mut self) -> Result<(Rational, PBWMonomial), ParseError> {
        let at = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.rational()?;
                let after = self.pos;
                self.skip_ws();
                let star = self.peek() == Some('*');
                if star {
                    self.bump();
                    self.skip_ws();
                }
                if self.peek().is_some_and(|c| Letter::from_char(c).is_some()) {
                    Ok((coeff, self.monomial()?))
                } else if star {
                    self.error(self.pos, "expected a monomial after `*`")
                } else {
                    self.pos = after;
                    Ok((coeff, PBWMonomial::unit()))
                }
            }
            Some(c) if Letter::from_char(c).is_some() => {
                Ok((Rational::from_integer(1.into()), self.monomial()?))
            }
            Some(c) => self.error(at, format!("unexpected `{c}`")),
            None => self.error(at, "unexpected end of input"),
        }
    }

    fn element(&mut self) -> Result<UElement, ParseError> {
        let mut out = UElement::zero();
        self.skip_ws();
        let mut negative = self.sign() == Some(true);
        loop {
            self.skip_ws();
            let (coeff, m) = self.term()?;
            out.add_term(m, if negative { -coeff } else { coeff });
            self.skip_ws();
            if self.peek().is_none() {
                return Ok(out);
            }
            let at = self.pos;
            negative = match self.sign() {
                Some(n) => n,
                None => {
                    let c = self.peek().unwrap_or_default();
                    return self.error(at, format!("expected `+` or `-`, found `{c}`"));
                }
            };
        }
    }
}

/// Parses an element of `U(M)`. Repeated monomials are summed.
pub fn parse(text: &str) -> Result<UElement, ParseError> {
    Parser { src: text, pos: 0 }.element()
}
