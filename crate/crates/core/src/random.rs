//! Seeded generators for the randomized verification suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alternative::{AElement, AMonomial};
use crate::{MalcevVector, PBWMonomial, Rational, UElement};

/// Deterministic sampler; identical seeds give identical streams on every platform.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn below(&mut self, n: u32) -> u32 {
        self.rng.gen_range(0..n)
    }

    /// A small rational `p/q` with `|p| <= 9`, `1 <= q <= 6`; zero about one time in nineteen.
    pub fn rational(&mut self) -> Rational {
        let p: i64 = self.rng.gen_range(-9..=9);
        let q: i64 = self.rng.gen_range(1..=6);
        Rational::new(p.into(), q.into())
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if r != Rational::from_integer(0.into()) {
                return r;
            }
        }
    }

    pub fn malcev_vector(&mut self) -> MalcevVector {
        MalcevVector::new(std::array::from_fn(|_| self.rational()))
    }

    pub fn monomial(&mut self, max_exp: u32) -> PBWMonomial {
        PBWMonomial::new(std::array::from_fn(|_| self.below(max_exp + 1)))
    }

    pub fn u_element(&mut self, max_terms: u32, max_exp: u32) -> UElement {
        let n = 1 + self.below(max_terms);
        (0..n)
            .map(|_| (self.monomial(max_exp), self.nonzero_rational()))
            .collect()
    }

    pub fn a_monomial(&mut self, max_exp: u32) -> AMonomial {
        let type1 = self.rng.gen_bool(0.5);
        let mut e = || self.below(max_exp + 1);
        if type1 {
            AMonomial::Type1 {
                i: e(),
                j: e(),
                l: e(),
            }
        } else {
            AMonomial::Type2 {
                i: e(),
                j: e(),
                k: e(),
                l: e(),
            }
        }
    }

    pub fn a_element(&mut self, max_terms: u32, max_exp: u32) -> AElement {
        let n = 1 + self.below(max_terms);
        (0..n)
            .map(|_| (self.a_monomial(max_exp), self.nonzero_rational()))
            .collect()
    }
}
