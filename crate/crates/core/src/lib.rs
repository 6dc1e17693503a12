//! Exact arithmetic in the universal nonassociative enveloping algebra `U(M)`
//! of the five-dimensional nilpotent Malcev algebra `M`, and in its universal
//! alternative quotient `A(M)`.
//!
//! `M` has basis `a < b < c < d < e` with the nonzero brackets `[a,b] = c`
//! and `[c,d] = e`. Elements of `U(M)` are written in the PBW basis of
//! left-tapped monomials `a^i b^j c^k d^l e^m`, which we identify with the
//! commutative monomials of the polynomial algebra `P(M)`.
//!
//! Products in `U(M)` are available through three independent routes:
//!
//! * [`envelope::mul_u_closed`]: the closed-form nine-index structure constants,
//! * [`envelope::RecursiveOracle`]: structural recursion on monomial length,
//! * [`diffops::l_of_monomial`]: normal-ordered differential operators on `P(M)`.
//!
//! The quotient `A(M) = U(M)/J` with `J = <ce, e^2>` lives in [`alternative`].

pub mod alternative;
pub mod checks;
pub mod combinatorics;
pub mod diffops;
pub mod envelope;
pub mod lincomb;
pub mod malcev;
pub mod monomial;
pub mod random;

pub use alternative::{AElement, AMonomial};
pub use diffops::{OpWord, Operator};
pub use lincomb::LinComb;
pub use malcev::{bracket_m, Letter, MalcevVector};
pub use monomial::PBWMonomial;

/// Exact coefficient field.
pub type Rational = num_rational::BigRational;

/// A finite rational combination of PBW monomials, i.e. an element of `U(M)`.
pub type UElement = LinComb<PBWMonomial>;

/// Shorthand for a small rational `num / den`.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
