//! The universal alternative enveloping algebra `A(M) = U(M)/J`, `J = <ce, e^2>`.
//!
//! `J` is spanned by the PBW monomials with `e`-exponent at least two, or
//! `e`-exponent one and `c`-exponent at least one. The complement gives the
//! quotient basis:
//!
//! * type 1: `a^i b^j d^l e`
//! * type 2: `a^i b^j c^k d^l`
//!
//! [`mul_a`] implements the quotient structure constants directly; projecting
//! a product computed in `U(M)` is kept as an independent cross-check.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use crate::combinatorics::{binomial, factorial};
use crate::lincomb::{Basis, LinComb};
use crate::malcev::{bracket_m, Letter, MalcevVector};
use crate::{q, PBWMonomial, Rational, UElement};

/// A basis monomial of `A(M)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AMonomial {
    /// `a^i b^j d^l e`
    Type1 { i: u32, j: u32, l: u32 },
    /// `a^i b^j c^k d^l`
    Type2 { i: u32, j: u32, k: u32, l: u32 },
}

impl AMonomial {
    pub fn to_pbw(&self) -> PBWMonomial {
        match *self {
            AMonomial::Type1 { i, j, l } => PBWMonomial::new([i, j, 0, l, 1]),
            AMonomial::Type2 { i, j, k, l } => PBWMonomial::new([i, j, k, l, 0]),
        }
    }

    /// The quotient basis element a PBW monomial maps to, or `None` if it lies in `J`.
    pub fn from_pbw(x: &PBWMonomial) -> Option<AMonomial> {
        let [i, j, k, l, m] = x.exps();
        match m {
            0 => Some(AMonomial::Type2 { i, j, k, l }),
            1 if k == 0 => Some(AMonomial::Type1 { i, j, l }),
            _ => None,
        }
    }

    pub fn type_tag(&self) -> u8 {
        match self {
            AMonomial::Type1 { .. } => 1,
            AMonomial::Type2 { .. } => 2,
        }
    }
}

impl Ord for AMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_pbw().cmp(&other.to_pbw())
    }
}

impl PartialOrd for AMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_pbw().fmt(f)
    }
}

impl Basis for AMonomial {
    fn is_unit(&self) -> bool {
        self.to_pbw().is_unit()
    }
}

/// An element of `A(M)` in the quotient basis.
pub type AElement = LinComb<AMonomial>;

/// Whether a PBW monomial belongs to the ideal `J`.
pub fn in_ideal_j(x: &PBWMonomial) -> bool {
    let [_, _, k, _, m] = x.exps();
    m >= 2 || (m == 1 && k >= 1)
}

/// The quotient map `U(M) -> A(M)`: drops monomials in `J`.
pub fn project(x: &UElement) -> AElement {
    x.iter()
        .filter_map(|(m, c)| AMonomial::from_pbw(m).map(|am| (am, c.clone())))
        .collect()
}

/// Coset representatives back in `U(M)`.
pub fn lift(x: &AElement) -> UElement {
    x.map_keys(AMonomial::to_pbw)
}

/// Coefficient of the `e`-correction in a product of two type-2 monomials.
fn correction(i: i64, j: i64, l: i64, p: i64, qq: i64, s: i64) -> Rational {
    q(i * j * s, 6) - q(i * l * qq, 6) + q(j * l * p, 2) + q(j * p * s, 3) - q(l * p * qq, 3)
}

fn exp(n: i64) -> u32 {
    u32::try_from(n).expect("negative exponent on a term with nonzero coefficient")
}

/// Product of two quotient basis monomials.
pub fn mul_a_monomials(x: &AMonomial, y: &AMonomial) -> AElement {
    use AMonomial::*;
    match (*x, *y) {
        (Type1 { .. }, Type1 { .. }) => AElement::zero(),
        (Type2 { i, j, k, l }, Type1 { i: p, j: qq, l: s }) => {
            if k == 0 {
                AElement::basis(Type1 {
                    i: i + p,
                    j: j + qq,
                    l: l + s,
                })
            } else {
                AElement::zero()
            }
        }
        (
            Type1 { i, j, l },
            Type2 {
                i: p,
                j: qq,
                k: r,
                l: s,
            },
        ) => {
            if r == 0 {
                AElement::basis(Type1 {
                    i: i + p,
                    j: j + qq,
                    l: l + s,
                })
            } else {
                AElement::zero()
            }
        }
        (
            Type2 { i, j, k, l },
            Type2 {
                i: p,
                j: qq,
                k: r,
                l: s,
            },
        ) => {
            let mut out = AElement::zero();
            for mu in 0..=j.min(p) {
                let mut c = factorial(mu.into())
                    * binomial(j.into(), mu.into())
                    * binomial(p.into(), mu.into());
                if mu % 2 == 1 {
                    c = -c;
                }
                out.add_term(
                    Type2 {
                        i: i + p - mu,
                        j: j + qq - mu,
                        k: k + r + mu,
                        l: l + s,
                    },
                    Rational::from_integer(c),
                );
            }
            let (i, j, l, p, qq, s) = (
                i64::from(i),
                i64::from(j),
                i64::from(l),
                i64::from(p),
                i64::from(qq),
                i64::from(s),
            );
            if k == 0 && r == 0 {
                let c = correction(i, j, l, p, qq, s);
                if !c.is_zero() {
                    out.add_term(
                        Type1 {
                            i: exp(i + p - 1),
                            j: exp(j + qq - 1),
                            l: exp(l + s - 1),
                        },
                        c,
                    );
                }
            }
            if k == 0 && r == 1 && l > 0 {
                out.add_term(
                    Type1 {
                        i: exp(i + p),
                        j: exp(j + qq),
                        l: exp(l + s - 1),
                    },
                    q(-l, 1),
                );
            }
            out
        }
    }
}

pub fn mul_a(x: &AElement, y: &AElement) -> AElement {
    x.bilinear(y, mul_a_monomials)
}

/// `[x, y] = xy - yx` in `A(M)`.
pub fn commutator_a(x: &AElement, y: &AElement) -> AElement {
    mul_a(x, y) - mul_a(y, x)
}

/// `(x, y, z) = (xy)z - x(yz)` in `A(M)`.
pub fn associator_a(x: &AElement, y: &AElement, z: &AElement) -> AElement {
    mul_a(&mul_a(x, y), z) - mul_a(x, &mul_a(y, z))
}

/// Closed form of the associator of three monomials. Zero whenever a type-1
/// monomial is involved; for type-2 monomials
/// `1/6 (iqy - isw - jpy + jsv + lpw - lqv) a^(i+p+v-1) b^(j+q+w-1) d^(l+s+y-1) e`
/// when all three `c`-exponents vanish.
pub fn associator_closed_form(x: &AMonomial, y: &AMonomial, z: &AMonomial) -> AElement {
    use AMonomial::Type2;
    let (
        Type2 { i, j, k, l },
        Type2 {
            i: p,
            j: qq,
            k: r,
            l: s,
        },
        Type2 {
            i: v,
            j: w,
            k: xx,
            l: yy,
        },
    ) = (*x, *y, *z)
    else {
        return AElement::zero();
    };
    if k != 0 || r != 0 || xx != 0 {
        return AElement::zero();
    }
    let [i, j, l, p, qq, s, v, w, yy] = [i, j, l, p, qq, s, v, w, yy].map(i64::from);
    let c = q(
        i * qq * yy - i * s * w - j * p * yy + j * s * v + l * p * w - l * qq * v,
        6,
    );
    if c.is_zero() {
        return AElement::zero();
    }
    AElement::term(
        AMonomial::Type1 {
            i: exp(i + p + v - 1),
            j: exp(j + qq + w - 1),
            l: exp(l + s + yy - 1),
        },
        c,
    )
}

fn embed_a(v: &MalcevVector) -> AElement {
    v.terms()
        .filter_map(|(l, c)| AMonomial::from_pbw(&l.into()).map(|m| (m, c.clone())))
        .collect()
}

/// Outcome of [`check_speciality`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialityReport {
    /// Letters whose image in `A(M)` vanishes.
    pub collapsed_letters: Vec<Letter>,
    /// Basis pairs whose commutator in `A(M)` differs from the bracket of `M`.
    pub bracket_mismatches: Vec<(Letter, Letter, AElement, AElement)>,
}

impl SpecialityReport {
    pub fn passed(&self) -> bool {
        self.collapsed_letters.is_empty() && self.bracket_mismatches.is_empty()
    }
}

/// Checks that `M -> A(M)` is injective and that commutators in `A(M)`
/// reproduce the bracket of `M` on basis pairs.
pub fn check_speciality() -> SpecialityReport {
    let collapsed_letters = Letter::ALL
        .into_iter()
        .filter(|&l| in_ideal_j(&l.into()))
        .collect();
    let mut bracket_mismatches = Vec::new();
    for x in Letter::ALL {
        for y in Letter::ALL {
            let got = commutator_a(&embed_a(&x.into()), &embed_a(&y.into()));
            let want = embed_a(&bracket_m(&x.into(), &y.into()));
            if got != want {
                bracket_mismatches.push((x, y, got, want));
            }
        }
    }
    SpecialityReport {
        collapsed_letters,
        bracket_mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::{associator_u, mul_u, mul_u_closed};
    use crate::random::Sampler;
    use AMonomial::*;

    fn t2(i: u32, j: u32, k: u32, l: u32) -> AElement {
        AElement::basis(Type2 { i, j, k, l })
    }

    fn t1(i: u32, j: u32, l: u32) -> AElement {
        AElement::basis(Type1 { i, j, l })
    }

    fn u(e: [u32; 5]) -> UElement {
        UElement::basis(PBWMonomial::new(e))
    }

    #[test]
    fn ideal_membership() {
        assert!(in_ideal_j(&PBWMonomial::new([0, 0, 1, 0, 1])));
        assert!(in_ideal_j(&PBWMonomial::new([0, 0, 0, 0, 2])));
        assert!(!in_ideal_j(&PBWMonomial::new([1, 1, 0, 1, 1])));
        for l in Letter::ALL {
            assert!(!in_ideal_j(&l.into()));
        }
    }

    #[test]
    fn projection_examples() {
        assert!(project(&UElement::term(PBWMonomial::new([0, 0, 1, 0, 1]), q(-1, 6))).is_zero());
        let ab_c = &u([1, 1, 0, 0, 0]) - &u([0, 0, 1, 0, 0]);
        assert_eq!(project(&ab_c), &t2(1, 1, 0, 0) - &t2(0, 0, 1, 0));
        let cd_e = &u([0, 0, 1, 1, 0]) - &u([0, 0, 0, 0, 1]);
        assert_eq!(project(&cd_e), &t2(0, 0, 1, 1) - &t1(0, 0, 0));
    }

    #[test]
    fn product_examples() {
        assert!(mul_a(&t1(1, 2, 1), &t1(0, 1, 3)).is_zero());
        assert_eq!(
            mul_a(&t2(0, 0, 0, 1), &t2(0, 0, 1, 0)),
            &t2(0, 0, 1, 1) - &t1(0, 0, 0)
        );
        assert_eq!(
            mul_a(&t2(0, 1, 0, 0), &t2(1, 0, 0, 0)),
            &t2(1, 1, 0, 0) - &t2(0, 0, 1, 0)
        );
        assert_eq!(mul_a(&t2(1, 2, 0, 1), &t1(2, 0, 1)), t1(3, 2, 2));
        assert!(mul_a(&t2(1, 2, 1, 1), &t1(2, 0, 1)).is_zero());
        assert_eq!(mul_a(&t1(2, 0, 1), &t2(1, 2, 0, 1)), t1(3, 2, 2));
    }

    #[test]
    fn associator_examples() {
        let (a, b, d) = (t2(1, 0, 0, 0), t2(0, 1, 0, 0), t2(0, 0, 0, 1));
        assert_eq!(
            associator_a(&a, &b, &d),
            AElement::term(Type1 { i: 0, j: 0, l: 0 }, q(1, 6))
        );
        assert_eq!(
            associator_a(&b, &a, &d),
            AElement::term(Type1 { i: 0, j: 0, l: 0 }, q(-1, 6))
        );
        let mut s = Sampler::new(8);
        for _ in 0..100 {
            let m1 = AElement::basis(Type1 {
                i: s.below(3),
                j: s.below(3),
                l: s.below(3),
            });
            let m2 = AElement::basis(s.a_monomial(3));
            let m3 = AElement::basis(s.a_monomial(3));
            assert!(associator_a(&m1, &m2, &m3).is_zero());
            assert!(associator_a(&m2, &m1, &m3).is_zero());
            assert!(associator_a(&m2, &m3, &m1).is_zero());
        }
    }

    #[test]
    fn alternators_die_in_the_quotient() {
        let ab = u([1, 1, 0, 0, 0]);
        let d = u([0, 0, 0, 1, 0]);
        let bd = u([0, 1, 0, 1, 0]);
        let a2 = u([2, 0, 0, 0, 0]);
        assert!(!associator_u(&ab, &ab, &d).is_zero());
        assert!(project(&associator_u(&ab, &ab, &d)).is_zero());
        assert!(!associator_u(&bd, &bd, &a2).is_zero());
        assert!(project(&associator_u(&bd, &bd, &a2)).is_zero());
    }

    #[test]
    fn projection_is_multiplicative_on_low_degrees() {
        let monos = PBWMonomial::up_to_degree(3);
        for x in &monos {
            for y in &monos {
                let via_u = project(&mul_u_closed(x, y));
                let via_a = mul_a(
                    &project(&UElement::basis(*x)),
                    &project(&UElement::basis(*y)),
                );
                assert_eq!(via_u, via_a, "{x} * {y}");
            }
        }
        let x = u([1, 1, 0, 1, 0]);
        assert_eq!(project(&mul_u(&x, &x)), mul_a(&project(&x), &project(&x)));
    }

    #[test]
    fn alternative_laws_on_random_elements() {
        let mut s = Sampler::new(21);
        for _ in 0..100 {
            let x = s.a_element(5, 3);
            let y = s.a_element(5, 3);
            assert!(associator_a(&x, &x, &y).is_zero());
            assert!(associator_a(&y, &x, &x).is_zero());
        }
    }

    #[test]
    fn speciality_holds() {
        let report = check_speciality();
        assert!(report.passed(), "{report:?}");
        let a = t2(1, 0, 0, 0);
        let b = t2(0, 1, 0, 0);
        assert_eq!(commutator_a(&a, &b), t2(0, 0, 1, 0));
        assert_eq!(commutator_a(&t2(0, 0, 1, 0), &t2(0, 0, 0, 1)), t1(0, 0, 0));
    }

    #[test]
    fn display_uses_pbw_form() {
        let x = &t2(1, 1, 0, 0) - &t1(0, 0, 0);
        assert_eq!(x.to_string(), "ab - e");
        assert_eq!(lift(&x), &u([1, 1, 0, 0, 0]) - &u([0, 0, 0, 0, 1]));
    }
}
