//! Closed-form structure constants of `U(M)`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinatorics::{binomial_signed, factorial, falling_factorial, multinomial};
use crate::{PBWMonomial, Rational, UElement};

/// `(a^i b^j c^k d^l e^m)(a^p b^q c^r d^s e^t)` in `U(M)` via the nine-index sum
/// over `alpha, beta, gamma, delta, epsilon, zeta, eta, theta, lambda`.
///
/// Only index tuples whose multinomial and falling-factorial factors are all
/// nonzero are visited.
pub fn mul_u_closed(x: &PBWMonomial, y: &PBWMonomial) -> UElement {
    let [i, j, k, l, m] = x.exps().map(i64::from);
    let [p, qq, r, s, t] = y.exps().map(i64::from);
    if x.is_unit() {
        return UElement::basis(*y);
    }

    // Numerators over the common denominator 2^(i+l) 3^(j+l), reduced once at the end.
    let mut acc: std::collections::BTreeMap<PBWMonomial, BigInt> = Default::default();
    let max_two = (i + l) as u32;
    let max_three = (j + l) as u32;

    for alpha in 0..=l.min(j) {
        for beta in 0..=i {
            for gamma in 0..=beta {
                if beta - gamma > alpha {
                    continue;
                }
                for delta in 0..=gamma {
                    let u = j - alpha - delta;
                    let y_len = l - alpha - (gamma - delta);
                    if u < 0 || y_len < 0 {
                        continue;
                    }
                    let head = factorial(alpha as u64)
                        * factorial(beta as u64)
                        * binomial_signed(alpha, beta - gamma)
                        * binomial_signed(i, beta);
                    for eps in 0..=u {
                        for zeta in 0..=u - eps {
                            let m_j = multinomial(j, &[alpha, delta, eps, zeta]);
                            let dd_total = j - alpha - eps - zeta;
                            for eta in 0..=y_len {
                                for theta in 0..=y_len - eta {
                                    // exponents of D_a, D_b, D_c fed into the falling factorials
                                    let da = j - beta - eps + l - alpha - eta - theta;
                                    let db = l - alpha - eta - theta;
                                    if da > p || db > qq || theta > r {
                                        continue;
                                    }
                                    let m_l = multinomial(l, &[alpha, gamma - delta, eta, theta]);
                                    let ff_abc = falling_factorial(p as u64, da as u64)
                                        * falling_factorial(qq as u64, db as u64)
                                        * falling_factorial(r as u64, theta as u64);
                                    let base = &head * &m_j * &m_l * ff_abc;
                                    let negative =
                                        (beta + zeta + l - alpha - gamma - eta).rem_euclid(2) == 1;
                                    let two = (alpha + gamma) as u32;
                                    let three = (j - eps - zeta + l - alpha - eta - theta) as u32;
                                    let scale = BigInt::from(2).pow(max_two - two)
                                        * BigInt::from(3).pow(max_three - three);
                                    for lambda in 0..=eta.min(dd_total) {
                                        let dd = dd_total - lambda;
                                        if dd > s {
                                            continue;
                                        }
                                        let mut c = &base
                                            * factorial(lambda as u64)
                                            * binomial_signed(dd_total, lambda)
                                            * binomial_signed(eta, lambda)
                                            * falling_factorial(s as u64, dd as u64)
                                            * &scale;
                                        if c.is_zero() {
                                            continue;
                                        }
                                        if negative {
                                            c = -c;
                                        }
                                        let out = PBWMonomial::new([
                                            (i - beta + p - da) as u32,
                                            (eps + qq - db) as u32,
                                            (zeta + k + r - theta) as u32,
                                            (eta - lambda + s - dd) as u32,
                                            (dd_total + l - eta + m + t) as u32,
                                        ]);
                                        *acc.entry(out).or_insert_with(BigInt::zero) += c;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    let den = BigInt::from(2).pow(max_two) * BigInt::from(3).pow(max_three);
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(mono, c)| (mono, Rational::new(c, den.clone())))
        .collect()
}

/// The product inside the associative subalgebra generated by `c, d, e`:
/// `(c^i d^j e^k)(c^l d^m e^n) = sum_a (-1)^a a! C(j,a) C(l,a) c^(i+l-a) d^(j+m-a) e^(k+n+a)`.
///
/// Panics if either argument involves `a` or `b`.
pub fn mul_cde(x: &PBWMonomial, y: &PBWMonomial) -> UElement {
    let [xa, xb, i, j, k] = x.exps();
    let [ya, yb, l, m, n] = y.exps();
    assert!(
        xa == 0 && xb == 0 && ya == 0 && yb == 0,
        "arguments must lie in U(N)"
    );
    let mut out = UElement::zero();
    for alpha in 0..=j.min(l) {
        let mut c = factorial(alpha as u64)
            * binomial_signed(j.into(), alpha.into())
            * binomial_signed(l.into(), alpha.into());
        if alpha % 2 == 1 {
            c = -c;
        }
        out.add_term(
            PBWMonomial::new([0, 0, i + l - alpha, j + m - alpha, k + n + alpha]),
            Rational::from_integer(c),
        );
    }
    out
}
