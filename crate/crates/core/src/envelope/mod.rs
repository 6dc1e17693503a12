//! Multiplication, brackets and associators in `U(M)`.

mod closed;
mod oracle;

pub use closed::{mul_cde, mul_u_closed};
pub use oracle::{mul_u_oracle, OracleError, RecursiveOracle};

use crate::{MalcevVector, PBWMonomial, UElement};

/// Bilinear extension of [`mul_u_closed`].
pub fn mul_u(x: &UElement, y: &UElement) -> UElement {
    x.bilinear(y, mul_u_closed)
}

/// `[x, y] = xy - yx`.
pub fn bracket_u(x: &UElement, y: &UElement) -> UElement {
    mul_u(x, y) - mul_u(y, x)
}

/// `(x, y, z) = (xy)z - x(yz)`.
pub fn associator_u(x: &UElement, y: &UElement, z: &UElement) -> UElement {
    mul_u(&mul_u(x, y), z) - mul_u(x, &mul_u(y, z))
}

/// `J(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y]`.
pub fn jacobian_u(x: &UElement, y: &UElement, z: &UElement) -> UElement {
    bracket_u(&bracket_u(x, y), z) + bracket_u(&bracket_u(y, z), x) + bracket_u(&bracket_u(z, x), y)
}

/// The inclusion `M -> U(M)`.
pub fn embed(v: &MalcevVector) -> UElement {
    v.terms()
        .map(|(l, c)| (PBWMonomial::from(l), c.clone()))
        .collect()
}

/// Inverse of [`embed`] on elements of degree one; `None` otherwise.
pub fn as_malcev_vector(x: &UElement) -> Option<MalcevVector> {
    let mut coords: [crate::Rational; 5] = Default::default();
    for (m, c) in x.iter() {
        if m.degree() != 1 {
            return None;
        }
        coords[m.leading_letter()?.index()] = c.clone();
    }
    Some(MalcevVector::new(coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffops::{l_of_monomial, rho};
    use crate::malcev::{bracket_m, Letter};
    use crate::q;
    use crate::random::Sampler;
    use Letter::*;

    fn mono(e: [u32; 5]) -> PBWMonomial {
        PBWMonomial::new(e)
    }

    fn u(e: [u32; 5]) -> UElement {
        UElement::basis(mono(e))
    }

    fn parse_terms(terms: &[([u32; 5], i64, i64)]) -> UElement {
        terms.iter().map(|&(e, n, d)| (mono(e), q(n, d))).collect()
    }

    const ABD: [u32; 5] = [1, 1, 0, 1, 0];

    #[test]
    fn unit_is_two_sided() {
        for x in PBWMonomial::up_to_degree(3) {
            assert_eq!(mul_u_closed(&PBWMonomial::unit(), &x), UElement::basis(x));
            assert_eq!(mul_u_closed(&x, &PBWMonomial::unit()), UElement::basis(x));
        }
    }

    #[test]
    fn small_products() {
        assert_eq!(
            mul_u_closed(&mono([0, 0, 0, 1, 0]), &mono([0, 0, 1, 0, 0])),
            &u([0, 0, 1, 1, 0]) - &u([0, 0, 0, 0, 1])
        );
        assert_eq!(
            mul_u_closed(&mono([0, 1, 0, 0, 0]), &mono([1, 0, 0, 0, 0])),
            &u([1, 1, 0, 0, 0]) - &u([0, 0, 1, 0, 0])
        );
    }

    #[test]
    fn mul_u_bilinear() {
        let mut s = Sampler::new(2);
        for _ in 0..30 {
            let (x, y, z) = (s.u_element(3, 2), s.u_element(3, 2), s.u_element(3, 2));
            assert_eq!(mul_u(&(&x + &y), &z), &mul_u(&x, &z) + &mul_u(&y, &z));
            assert!(mul_u(&UElement::zero(), &x).is_zero());
        }
        let half_a = UElement::term(mono([1, 0, 0, 0, 0]), q(1, 2));
        let two_b = UElement::term(mono([0, 1, 0, 0, 0]), q(2, 1));
        assert_eq!(mul_u(&half_a, &two_b), u([1, 1, 0, 0, 0]));
    }

    #[test]
    fn non_power_associativity_witness() {
        let abd = u(ABD);
        let want = parse_terms(&[
            ([1, 1, 1, 2, 1], 1, 6),
            ([1, 1, 0, 1, 2], -1, 6),
            ([0, 0, 2, 2, 1], -1, 6),
            ([0, 0, 1, 1, 2], 11, 36),
            ([0, 0, 0, 0, 3], -1, 12),
        ]);
        assert_eq!(associator_u(&abd, &abd, &abd), want);
    }

    #[test]
    fn alternators() {
        let ab = u([1, 1, 0, 0, 0]);
        let d = u([0, 0, 0, 1, 0]);
        assert_eq!(
            associator_u(&ab, &ab, &d),
            parse_terms(&[([0, 0, 1, 0, 1], -1, 6)])
        );
        let bd = u([0, 1, 0, 1, 0]);
        let a2 = u([2, 0, 0, 0, 0]);
        assert_eq!(
            associator_u(&bd, &bd, &a2),
            parse_terms(&[([0, 0, 0, 0, 2], 1, 18)])
        );
    }

    #[test]
    fn oracle_agrees_with_closed_form_up_to_degree_three() {
        let mut oracle = RecursiveOracle::new();
        let monos = PBWMonomial::up_to_degree(3);
        for x in &monos {
            for y in &monos {
                let closed = mul_u_closed(x, y);
                assert_eq!(oracle.mul_monomials(x, y).unwrap(), closed, "{x} * {y}");
                assert_eq!(l_of_monomial(x).apply_monomial(y), closed, "L({x}) {y}");
            }
        }
        let abd = u(ABD);
        assert_eq!(mul_u_oracle(&abd, &abd).unwrap(), mul_u(&abd, &abd));
    }

    #[test]
    fn bracket_examples() {
        let d = u([0, 0, 0, 1, 0]);
        let c = u([0, 0, 1, 0, 0]);
        assert_eq!(bracket_u(&d, &c), -u([0, 0, 0, 0, 1]));
        let mut s = Sampler::new(4);
        for _ in 0..20 {
            let x = s.u_element(3, 2);
            assert!(bracket_u(&x, &x).is_zero());
        }
    }

    #[test]
    fn bracket_three_routes_agree() {
        let mut oracle = RecursiveOracle::new();
        for x in PBWMonomial::up_to_degree(3) {
            let xe = UElement::basis(x);
            for f in Letter::ALL {
                let via_mul = bracket_u(&xe, &u(PBWMonomial::from(f).exps()));
                assert_eq!(oracle.bracket_letter(&xe, f).unwrap(), via_mul);
                assert_eq!(rho(f).apply(&xe), via_mul);
            }
        }
    }

    #[test]
    fn jacobian_examples() {
        let v = |l: Letter| embed(&l.into());
        assert_eq!(jacobian_u(&v(A), &v(B), &v(D)), v(E));
        assert!(jacobian_u(&v(C), &v(D), &v(E)).is_zero());
        let mut s = Sampler::new(9);
        for _ in 0..10 {
            let x = embed(&s.malcev_vector());
            let y = embed(&s.malcev_vector());
            assert!(jacobian_u(&x, &x, &y).is_zero());
        }
    }

    #[test]
    fn degree_one_brackets_match_m() {
        let mut s = Sampler::new(12);
        for _ in 0..50 {
            let (x, y) = (s.malcev_vector(), s.malcev_vector());
            let got = bracket_u(&embed(&x), &embed(&y));
            assert_eq!(as_malcev_vector(&got), Some(bracket_m(&x, &y)));
        }
    }

    #[test]
    fn cde_subalgebra_formula() {
        let cde: Vec<_> = PBWMonomial::up_to_degree(4)
            .into_iter()
            .filter(|m| m.supported_in(&[C, D, E]))
            .collect();
        for x in &cde {
            for y in &cde {
                assert_eq!(mul_u_closed(x, y), mul_cde(x, y));
            }
        }
    }
}
