//! Products and brackets in `U(M)` by structural recursion on monomial length.
//!
//! Three mutually recursive rules, each peeling the leading letter of a
//! left-tapped monomial. For `f, g` letters and `x = g y`:
//!
//! ```text
//! [x, f] = [g,f] y + g [y,f] + 1/2 [[y,f],g] - 1/2 [[y,g],f] - 1/2 [y,[f,g]]
//!   f x  = g (f y) + [f,g] y - 1/3 [[y,f],g] + 1/3 [[y,g],f] + 1/3 [y,[f,g]]   (f > g)
//! ```
//!
//! and for a monomial `y = f x` of length at least two,
//!
//! ```text
//!   y z  = 2 f (x z) - x (f z) - x [z,f] + [x z, f].
//! ```
//!
//! When `f <= g`, `f x` is already a basis monomial. Nothing here touches the
//! closed-form constants or the operator calculus.

use std::collections::HashMap;

use thiserror::Error;

use crate::malcev::Letter;
use crate::{q, PBWMonomial, UElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("recursion depth limit of {limit} exceeded")]
    DepthExceeded { limit: usize },
}

type Res = Result<UElement, OracleError>;

/// Memoizing evaluator for the recursive product rules.
///
/// Memo tables only ever hold exact results for monomial arguments, so a
/// result never depends on what was computed earlier. When a memo limit is
/// set the tables are flushed once they reach it.
pub struct RecursiveOracle {
    products: HashMap<(PBWMonomial, PBWMonomial), UElement>,
    left: HashMap<(Letter, PBWMonomial), UElement>,
    brackets: HashMap<(PBWMonomial, Letter), UElement>,
    memo_limit: Option<usize>,
    depth_limit: usize,
}

impl Default for RecursiveOracle {
    fn default() -> Self {
        Self::new()
    }
}

impl RecursiveOracle {
    pub const DEFAULT_DEPTH_LIMIT: usize = 512;

    pub fn new() -> Self {
        RecursiveOracle {
            products: HashMap::new(),
            left: HashMap::new(),
            brackets: HashMap::new(),
            memo_limit: None,
            depth_limit: Self::DEFAULT_DEPTH_LIMIT,
        }
    }

    /// Caps the total number of memoized entries.
    pub fn with_memo_limit(mut self, limit: Option<usize>) -> Self {
        self.memo_limit = limit;
        self
    }

    pub fn with_depth_limit(mut self, limit: usize) -> Self {
        self.depth_limit = limit;
        self
    }

    pub fn memo_len(&self) -> usize {
        self.products.len() + self.left.len() + self.brackets.len()
    }

    pub fn clear(&mut self) {
        self.products.clear();
        self.left.clear();
        self.brackets.clear();
    }

    fn make_room(&mut self) {
        if let Some(limit) = self.memo_limit {
            if self.memo_len() >= limit {
                self.clear();
            }
        }
    }

    fn check_depth(&self, depth: usize) -> Result<(), OracleError> {
        if depth > self.depth_limit {
            Err(OracleError::DepthExceeded {
                limit: self.depth_limit,
            })
        } else {
            Ok(())
        }
    }

    /// `x y` for arbitrary elements.
    pub fn product(&mut self, x: &UElement, y: &UElement) -> Res {
        let mut out = UElement::zero();
        for (xm, xc) in x.iter() {
            for (ym, yc) in y.iter() {
                out.add_scaled(&self.mul(xm, ym, 0)?, &(xc * yc));
            }
        }
        Ok(out)
    }

    /// `[x, f]` for an arbitrary element and a letter.
    pub fn bracket_letter(&mut self, x: &UElement, f: Letter) -> Res {
        self.bracket_elem(x, f, 0)
    }

    /// `f x` for a letter and an arbitrary element.
    pub fn left_multiply(&mut self, f: Letter, x: &UElement) -> Res {
        self.left_mul_elem(f, x, 0)
    }

    pub fn mul_monomials(&mut self, x: &PBWMonomial, y: &PBWMonomial) -> Res {
        self.mul(x, y, 0)
    }

    fn mul(&mut self, y: &PBWMonomial, z: &PBWMonomial, depth: usize) -> Res {
        self.check_depth(depth)?;
        if let Some(v) = self.products.get(&(*y, *z)) {
            return Ok(v.clone());
        }
        let d = depth + 1;
        let out = match y.split_leading() {
            None => UElement::basis(*z),
            Some((f, x)) if x.is_unit() => self.left_mul(f, z, d)?,
            Some((f, x)) => {
                let xz = self.mul(&x, z, d)?;
                let mut out = self.left_mul_elem(f, &xz, d)?.scale(&q(2, 1));
                let fz = self.left_mul(f, z, d)?;
                out -= &self.mul_left_monomial(&x, &fz, d)?;
                let zf = self.bracket(z, f, d)?;
                out -= &self.mul_left_monomial(&x, &zf, d)?;
                out += &self.bracket_elem(&xz, f, d)?;
                out
            }
        };
        self.make_room();
        self.products.insert((*y, *z), out.clone());
        Ok(out)
    }

    fn mul_left_monomial(&mut self, x: &PBWMonomial, w: &UElement, depth: usize) -> Res {
        let mut out = UElement::zero();
        for (m, c) in w.iter() {
            out.add_scaled(&self.mul(x, m, depth)?, c);
        }
        Ok(out)
    }

    fn left_mul(&mut self, f: Letter, x: &PBWMonomial, depth: usize) -> Res {
        self.check_depth(depth)?;
        let (g, y) = match x.split_leading() {
            None => return Ok(UElement::basis(f.into())),
            Some((g, _)) if f <= g => return Ok(UElement::basis(x.with_increment(f, 1))),
            Some(split) => split,
        };
        if let Some(v) = self.left.get(&(f, *x)) {
            return Ok(v.clone());
        }
        let d = depth + 1;
        let fy = self.left_mul(f, &y, d)?;
        let mut out = self.left_mul_elem(g, &fy, d)?;
        let fg = f.bracket(g);
        if let Some((sign, h)) = fg {
            out.add_scaled(&self.left_mul(h, &y, d)?, &q(sign.into(), 1));
        }
        let yf = self.bracket(&y, f, d)?;
        out.add_scaled(&self.bracket_elem(&yf, g, d)?, &q(-1, 3));
        let yg = self.bracket(&y, g, d)?;
        out.add_scaled(&self.bracket_elem(&yg, f, d)?, &q(1, 3));
        if let Some((sign, h)) = fg {
            out.add_scaled(&self.bracket(&y, h, d)?, &q(sign.into(), 3));
        }
        self.make_room();
        self.left.insert((f, *x), out.clone());
        Ok(out)
    }

    fn left_mul_elem(&mut self, f: Letter, x: &UElement, depth: usize) -> Res {
        let mut out = UElement::zero();
        for (m, c) in x.iter() {
            out.add_scaled(&self.left_mul(f, m, depth)?, c);
        }
        Ok(out)
    }

    fn bracket(&mut self, x: &PBWMonomial, f: Letter, depth: usize) -> Res {
        self.check_depth(depth)?;
        let (g, y) = match x.split_leading() {
            None => return Ok(UElement::zero()),
            Some(split) => split,
        };
        if y.is_unit() {
            return Ok(match g.bracket(f) {
                Some((sign, h)) => UElement::term(h.into(), q(sign.into(), 1)),
                None => UElement::zero(),
            });
        }
        if let Some(v) = self.brackets.get(&(*x, f)) {
            return Ok(v.clone());
        }
        let d = depth + 1;
        let mut out = UElement::zero();
        if let Some((sign, h)) = g.bracket(f) {
            out.add_scaled(&self.left_mul(h, &y, d)?, &q(sign.into(), 1));
        }
        let yf = self.bracket(&y, f, d)?;
        out += &self.left_mul_elem(g, &yf, d)?;
        out.add_scaled(&self.bracket_elem(&yf, g, d)?, &q(1, 2));
        let yg = self.bracket(&y, g, d)?;
        out.add_scaled(&self.bracket_elem(&yg, f, d)?, &q(-1, 2));
        if let Some((sign, h)) = f.bracket(g) {
            out.add_scaled(&self.bracket(&y, h, d)?, &q(-i64::from(sign), 2));
        }
        self.make_room();
        self.brackets.insert((*x, f), out.clone());
        Ok(out)
    }

    fn bracket_elem(&mut self, x: &UElement, f: Letter, depth: usize) -> Res {
        let mut out = UElement::zero();
        for (m, c) in x.iter() {
            out.add_scaled(&self.bracket(m, f, depth)?, c);
        }
        Ok(out)
    }
}

/// Product by the recursive rules, with a fresh memo table.
pub fn mul_u_oracle(x: &UElement, y: &UElement) -> Result<UElement, OracleError> {
    RecursiveOracle::new().product(x, y)
}
