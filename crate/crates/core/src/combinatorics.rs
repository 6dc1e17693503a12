//! Integer coefficient functions shared by every structure-constant formula.
//!
//! Everything here returns arbitrary-precision integers: weights such as
//! `alpha! beta! lambda!` times a handful of multinomials leave `u64` range
//! long before exponents get interesting.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Falling factorial `n (n-1) ... (n-k+1)`; `1` when `k = 0`, `0` when `k > n`.
pub fn falling_factorial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (n - k + 1..=n).fold(BigInt::one(), |acc, f| acc * f)
}

/// Multinomial `n! / (i_1! ... i_k! (n - sum i)!)`.
///
/// Zero if any part is negative or the parts sum past `n` (this includes
/// every negative `n`). With a single part this is the binomial coefficient.
pub fn multinomial(n: i64, parts: &[i64]) -> BigInt {
    if parts.iter().any(|&p| p < 0) {
        return BigInt::zero();
    }
    let total: i64 = parts.iter().sum();
    if n < 0 || total > n {
        return BigInt::zero();
    }
    // Build as a product of binomials to keep intermediates small.
    let mut remaining = n as u64;
    let mut acc = BigInt::one();
    for &p in parts {
        acc *= binomial(remaining, p as u64);
        remaining -= p as u64;
    }
    acc
}

/// `C(n, k)` for nonnegative arguments; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C(n, k)` with the zero convention for out-of-range (including negative) arguments.
pub fn binomial_signed(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        BigInt::zero()
    } else {
        binomial(n as u64, k as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn falling_factorial_examples() {
        for n in 0..10 {
            assert_eq!(falling_factorial(n, 0), big(1));
        }
        assert_eq!(falling_factorial(3, 2), big(6));
        assert_eq!(falling_factorial(2, 5), big(0));
        assert_eq!(falling_factorial(5, 5), big(120));
    }

    #[test]
    fn multinomial_examples() {
        // 5! / (2! 1! 2!)
        assert_eq!(multinomial(5, &[2, 1]), big(30));
        assert_eq!(multinomial(3, &[-1]), big(0));
        assert_eq!(multinomial(2, &[2, 1]), big(0));
        assert_eq!(multinomial(4, &[]), big(1));
        assert_eq!(multinomial(-1, &[0]), big(0));
        assert_eq!(multinomial(6, &[1, 2, 3]), big(60));
    }

    #[test]
    fn falling_factorial_is_multinomial_times_factorial() {
        for n in 0..=20u64 {
            for k in 0..=n {
                assert_eq!(
                    falling_factorial(n, k),
                    multinomial(n as i64, &[k as i64]) * factorial(k)
                );
            }
        }
    }

    #[test]
    fn large_values_do_not_overflow() {
        // 30!/(10!10!10!) = 5550996791340
        assert_eq!(multinomial(30, &[10, 10]), big(5_550_996_791_340));
        assert_eq!(factorial(25).to_string(), "15511210043330985984000000");
    }

    proptest! {
        #[test]
        fn pascal_rule(n in 1u64..60, k in 1u64..60) {
            prop_assume!(k <= n);
            prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }

        #[test]
        fn multinomial_is_symmetric_in_parts(n in 0i64..25, a in 0i64..10, b in 0i64..10, c in 0i64..10) {
            prop_assert_eq!(multinomial(n, &[a, b, c]), multinomial(n, &[c, a, b]));
            prop_assert_eq!(multinomial(n, &[a, b]), multinomial(n, &[a, b, n - a - b]));
        }
    }
}
