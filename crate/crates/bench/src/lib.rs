//! Benchmark inputs shared by the criterion benches.

use malcev_core::{AElement, AMonomial, PBWMonomial};

/// Every monomial of degree exactly `degree`.
pub fn monomials_of_degree(degree: u32) -> Vec<PBWMonomial> {
    PBWMonomial::up_to_degree(degree)
        .into_iter()
        .filter(|m| m.degree() == degree)
        .collect()
}

/// Type-2 monomials of `A(M)` with every exponent at most `max_exp`.
pub fn type2_elements(max_exp: u32) -> Vec<AElement> {
    let r = 0..=max_exp;
    let mut out = Vec::new();
    for i in r.clone() {
        for j in r.clone() {
            for k in r.clone() {
                for l in r.clone() {
                    out.push(AElement::basis(AMonomial::Type2 { i, j, k, l }));
                }
            }
        }
    }
    out
}
