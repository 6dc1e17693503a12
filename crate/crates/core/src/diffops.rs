//! Normal-ordered differential operators on `P(M)`.
//!
//! An operator is a rational combination of words `M^A D^B`: multiplication
//! by `a^A_a ... e^A_e` applied after the derivations `D_a^B_a ... D_d^B_d`.
//! `e` is central in every formula we need, so no word ever carries `D_e`.
//! Keeping operators in this normal form makes equality a direct comparison.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{binomial, binomial_signed, factorial, falling_factorial, multinomial};
use crate::lincomb::{Basis, LinComb};
use crate::malcev::Letter;
use crate::{q, PBWMonomial, Rational, UElement};

/// A normal-ordered word `M_a^.. M_e^.. D_a^.. D_d^..`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct OpWord {
    pub mul: [u32; 5],
    pub der: [u32; 4],
}

impl OpWord {
    pub const IDENTITY: OpWord = OpWord {
        mul: [0; 5],
        der: [0; 4],
    };

    /// Word from letter strings, e.g. `OpWord::parse("e", "bd")` is `M_e D_b D_d`.
    ///
    /// Panics on letters outside `a..e`, or on `e` among the derivations.
    pub fn parse(mul: &str, der: &str) -> OpWord {
        let mut w = OpWord::IDENTITY;
        for ch in mul.chars() {
            let l = Letter::from_char(ch).expect("multiplication letter in a..e");
            w.mul[l.index()] += 1;
        }
        for ch in der.chars() {
            let l = Letter::from_char(ch).expect("derivation letter in a..e");
            assert!(l != Letter::E, "D_e is not part of the operator calculus");
            w.der[l.index()] += 1;
        }
        w
    }

    /// Applies the word to a monomial: derivations first, then multiplications.
    pub fn apply(&self, y: &PBWMonomial) -> Option<(BigInt, PBWMonomial)> {
        let mut exps = y.exps();
        let mut coeff = BigInt::one();
        for (e, &k) in exps.iter_mut().zip(&self.der) {
            if k > *e {
                return None;
            }
            if k > 0 {
                coeff *= falling_factorial(u64::from(*e), u64::from(k));
                *e -= k;
            }
        }
        for (e, &m) in exps.iter_mut().zip(&self.mul) {
            *e += m;
        }
        Some((coeff, PBWMonomial::new(exps)))
    }
}

impl Basis for OpWord {
    fn is_unit(&self) -> bool {
        *self == OpWord::IDENTITY
    }
}

impl fmt::Display for OpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut factors = Vec::new();
        for (prefix, exps) in [("M", &self.mul[..]), ("D", &self.der[..])] {
            for (v, &n) in exps.iter().enumerate() {
                let l = Letter::ALL[v];
                match n {
                    0 => {}
                    1 => factors.push(format!("{prefix}_{l}")),
                    n => factors.push(format!("{prefix}_{l}^{n}")),
                }
            }
        }
        write!(f, "{}", factors.join(" "))
    }
}

/// A linear operator on `P(M)` in normal form.
pub type Operator = LinComb<OpWord>;

fn term(c: Rational, mul: &str, der: &str) -> Operator {
    Operator::term(OpWord::parse(mul, der), c)
}

impl LinComb<OpWord> {
    pub fn identity() -> Operator {
        Operator::basis(OpWord::IDENTITY)
    }

    /// `M_v`, multiplication by a letter.
    pub fn mul_by(letter: Letter) -> Operator {
        let mut w = OpWord::IDENTITY;
        w.mul[letter.index()] = 1;
        Operator::basis(w)
    }

    /// `D_v`, differentiation by a letter. Panics for `e`.
    pub fn derivation(letter: Letter) -> Operator {
        assert!(
            letter != Letter::E,
            "D_e is not part of the operator calculus"
        );
        let mut w = OpWord::IDENTITY;
        w.der[letter.index()] = 1;
        Operator::basis(w)
    }

    /// `self ∘ g`: apply `g` first, then `self`.
    pub fn compose(&self, g: &Operator) -> Operator {
        let mut out = Operator::zero();
        for (fw, fc) in self.iter() {
            for (gw, gc) in g.iter() {
                let c = fc * gc;
                for (k, w) in compose_words(fw, gw) {
                    out.add_term(w, &c * Rational::from_integer(k));
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Operator {
        let mut acc = Operator::identity();
        for _ in 0..n {
            acc = acc.compose(self);
        }
        acc
    }

    pub fn apply_monomial(&self, y: &PBWMonomial) -> UElement {
        let mut out = UElement::zero();
        for (w, c) in self.iter() {
            if let Some((k, m)) = w.apply(y) {
                out.add_term(m, c * Rational::from_integer(k));
            }
        }
        out
    }

    pub fn apply(&self, x: &UElement) -> UElement {
        x.linear(|m| self.apply_monomial(m))
    }
}

/// `[f, g] = f∘g - g∘f`.
pub fn commutator(f: &Operator, g: &Operator) -> Operator {
    f.compose(g) - g.compose(f)
}

/// Normal-orders `(M^A D^B)(M^C D^E)` by moving each `D_v^B_v` past `M_v^C_v`
/// with `D^m M^n = sum_i i! C(m,i) C(n,i) M^(n-i) D^(m-i)`.
fn compose_words(f: &OpWord, g: &OpWord) -> Vec<(BigInt, OpWord)> {
    let mut out = vec![(
        BigInt::one(),
        OpWord {
            mul: std::array::from_fn(|v| f.mul[v] + g.mul[v]),
            der: std::array::from_fn(|v| f.der[v] + g.der[v]),
        },
    )];
    for v in 0..4 {
        let (m, n) = (f.der[v], g.mul[v]);
        if m == 0 || n == 0 {
            continue;
        }
        let mut next = Vec::with_capacity(out.len() * (m.min(n) as usize + 1));
        for (k, w) in &out {
            for i in 0..=m.min(n) {
                let c = factorial(i as u64)
                    * binomial(m as u64, i as u64)
                    * binomial(n as u64, i as u64);
                let mut w2 = *w;
                w2.mul[v] -= i;
                w2.der[v] -= i;
                next.push((k * c, w2));
            }
        }
        out = next;
    }
    out
}

/// `ρ(v)`: the operator `y ↦ [y, v]`.
pub fn rho(letter: Letter) -> Operator {
    match letter {
        Letter::A => term(q(-1, 1), "c", "b") + term(q(1, 2), "e", "bd"),
        Letter::B => term(q(1, 1), "c", "a") + term(q(-1, 2), "e", "ad"),
        Letter::C => term(q(-1, 1), "e", "d"),
        Letter::D => term(q(1, 1), "e", "c") + term(q(1, 2), "e", "ab"),
        Letter::E => Operator::zero(),
    }
}

/// `L(v)`: the operator `y ↦ v y`.
pub fn lmul(letter: Letter) -> Operator {
    match letter {
        Letter::A => Operator::mul_by(Letter::A),
        Letter::B => term(q(1, 1), "b", "") + term(q(-1, 1), "c", "a") + term(q(1, 3), "e", "ad"),
        Letter::C => Operator::mul_by(Letter::C),
        Letter::D => term(q(1, 1), "d", "") + term(q(-1, 1), "e", "c") + term(q(-1, 3), "e", "ab"),
        Letter::E => Operator::mul_by(Letter::E),
    }
}

/// `R(v) = L(v) + ρ(v)`: right multiplication by `v`.
pub fn rmul(letter: Letter) -> Operator {
    lmul(letter) + rho(letter)
}

/// Left multiplication by a basis monomial, `L(a^i b^j c^k d^l e^m)`, from the
/// closed nine-index expansion.
///
/// Summation limits are the plain upper bounds; out-of-range multinomials
/// vanish by convention, which subsumes the tighter `min(..)` limits.
pub fn l_of_monomial(x: &PBWMonomial) -> Operator {
    let [i, j, k, l, m] = x.exps().map(i64::from);
    let mut out = Operator::zero();
    for alpha in 0..=l {
        for beta in 0..=i {
            for gamma in 0..=beta {
                // C(alpha, beta - gamma)
                if beta - gamma > alpha {
                    continue;
                }
                for delta in 0..=gamma {
                    let u = j - alpha - delta;
                    let y = l - alpha - (gamma - delta);
                    if u < 0 || y < 0 {
                        continue;
                    }
                    for eps in 0..=u {
                        for zeta in 0..=u - eps {
                            for eta in 0..=y {
                                for theta in 0..=y - eta {
                                    let dd_total = j - alpha - eps - zeta;
                                    for lambda in 0..=eta.min(dd_total) {
                                        let sign = beta + zeta + l - alpha - gamma - eta;
                                        let mut num = factorial(alpha as u64)
                                            * factorial(beta as u64)
                                            * factorial(lambda as u64)
                                            * binomial_signed(alpha, beta - gamma)
                                            * binomial_signed(i, beta)
                                            * multinomial(j, &[alpha, delta, eps, zeta])
                                            * binomial_signed(dd_total, lambda)
                                            * multinomial(l, &[alpha, gamma - delta, eta, theta])
                                            * binomial_signed(eta, lambda);
                                        if num.is_zero() {
                                            continue;
                                        }
                                        if sign.rem_euclid(2) == 1 {
                                            num = -num;
                                        }
                                        let two = (alpha + gamma) as u32;
                                        let three =
                                            (j - eps - zeta + l - alpha - eta - theta) as u32;
                                        let den =
                                            BigInt::from(2).pow(two) * BigInt::from(3).pow(three);
                                        let word = OpWord {
                                            mul: [
                                                (i - beta) as u32,
                                                eps as u32,
                                                (zeta + k) as u32,
                                                (eta - lambda) as u32,
                                                (j - alpha - eps - zeta + l - eta + m) as u32,
                                            ],
                                            der: [
                                                nonneg(j - beta - eps + l - alpha - eta - theta),
                                                nonneg(l - alpha - eta - theta),
                                                theta as u32,
                                                nonneg(dd_total - lambda),
                                            ],
                                        };
                                        out.add_term(word, Rational::new(num, den));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn nonneg(n: i64) -> u32 {
    u32::try_from(n).expect("negative exponent on a term with nonzero coefficient")
}

/// `L(x)` built by repeated composition from the single-letter operators:
/// `L(f x) = 2 L(f) L(x) - L(x) L(f) - L(x) ρ(f) + ρ(f) L(x)` with `f` the
/// leading letter. Independent of [`l_of_monomial`]; used as its oracle.
pub fn l_of_monomial_by_composition(x: &PBWMonomial) -> Operator {
    let Some((f, rest)) = x.split_leading() else {
        return Operator::identity();
    };
    if rest.is_unit() {
        return lmul(f);
    }
    let lx = l_of_monomial_by_composition(&rest);
    let (lf, rf) = (lmul(f), rho(f));
    let mut out = lf.compose(&lx).scale(&q(2, 1));
    out -= &lx.compose(&lf);
    out -= &lx.compose(&rf);
    out += &rf.compose(&lx);
    out
}
