use malcev_core::alternative::{associator_a, lift, mul_a, project};
use malcev_core::diffops::{l_of_monomial, lmul, rho};
use malcev_core::envelope::{associator_u, bracket_u, mul_u, mul_u_closed, RecursiveOracle};
use malcev_core::random::Sampler;
use malcev_core::{AElement, Letter, PBWMonomial, UElement};
use proptest::prelude::*;

fn monomial(max_exp: u32) -> impl Strategy<Value = PBWMonomial> {
    prop::array::uniform5(0..=max_exp).prop_map(PBWMonomial::new)
}

fn letter() -> impl Strategy<Value = Letter> {
    (0usize..5).prop_map(|i| Letter::from_index(i).unwrap())
}

fn u_element() -> impl Strategy<Value = UElement> {
    any::<u64>().prop_map(|seed| Sampler::new(seed).u_element(3, 2))
}

fn a_element() -> impl Strategy<Value = AElement> {
    any::<u64>().prop_map(|seed| Sampler::new(seed).a_element(4, 3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn three_routes_agree_beyond_the_exhaustive_range(x in monomial(2), y in monomial(2)) {
        let closed = mul_u_closed(&x, &y);
        prop_assert_eq!(&RecursiveOracle::new().mul_monomials(&x, &y).unwrap(), &closed);
        prop_assert_eq!(&l_of_monomial(&x).apply_monomial(&y), &closed);
    }

    #[test]
    fn leading_term_is_the_concatenation(x in monomial(3), y in monomial(3)) {
        let prod = mul_u_closed(&x, &y);
        let top = x.degree() + y.degree();
        prop_assert!(prod.keys().all(|m| m.degree() <= top));
        let leading: Vec<_> = prod.iter().filter(|(m, _)| m.degree() == top).collect();
        prop_assert_eq!(leading.len(), 1);
        prop_assert_eq!(*leading[0].0, x.concat(&y));
        prop_assert_eq!(leading[0].1, &malcev_core::q(1, 1));
    }

    #[test]
    fn multiplication_distributes(x in u_element(), y in u_element(), z in u_element()) {
        prop_assert_eq!(mul_u(&x, &(&y + &z)), mul_u(&x, &y) + mul_u(&x, &z));
        prop_assert_eq!(mul_u(&(&x + &y), &z), mul_u(&x, &z) + mul_u(&y, &z));
    }

    #[test]
    fn operators_act_as_left_multiplication_and_bracket(f in letter(), x in u_element()) {
        let fe = UElement::basis(f.into());
        prop_assert_eq!(lmul(f).apply(&x), mul_u(&fe, &x));
        prop_assert_eq!(rho(f).apply(&x), bracket_u(&x, &fe));
    }

    #[test]
    fn letters_lie_in_the_alternative_nucleus(g in letter(), x in u_element(), y in u_element()) {
        let ge = UElement::basis(g.into());
        let gxy = associator_u(&ge, &x, &y);
        prop_assert_eq!(&gxy, &-associator_u(&x, &ge, &y));
        prop_assert_eq!(&gxy, &associator_u(&x, &y, &ge));
    }

    #[test]
    fn projection_is_multiplicative(x in u_element(), y in u_element()) {
        prop_assert_eq!(project(&mul_u(&x, &y)), mul_a(&project(&x), &project(&y)));
    }

    #[test]
    fn lift_splits_project(x in a_element()) {
        prop_assert_eq!(project(&lift(&x)), x);
    }

    #[test]
    fn quotient_is_alternative(x in a_element(), y in a_element()) {
        prop_assert!(associator_a(&x, &x, &y).is_zero());
        prop_assert!(associator_a(&y, &x, &x).is_zero());
        prop_assert!(associator_a(&x, &y, &x).is_zero());
    }

    #[test]
    fn quotient_associator_alternates(x in a_element(), y in a_element(), z in a_element()) {
        let xyz = associator_a(&x, &y, &z);
        prop_assert_eq!(&associator_a(&y, &x, &z), &-&xyz);
        prop_assert_eq!(&associator_a(&y, &z, &x), &xyz);
    }
}

#[test]
fn u_is_not_alternative_but_its_quotient_is() {
    let ab = UElement::basis(PBWMonomial::new([1, 1, 0, 0, 0]));
    let d = UElement::basis(Letter::D.into());
    let alt = associator_u(&ab, &ab, &d);
    assert!(!alt.is_zero());
    assert!(project(&alt).is_zero());
}
