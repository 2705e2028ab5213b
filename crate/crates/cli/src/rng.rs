//! Deterministic sampling for the randomized suites.
//!
//! Every random quantity in the artifact flows through [`Sampler`], which
//! is seeded explicitly; two runs with the same seed see the same stream.

use idempair_core::element::rat;
use num_rational::BigRational;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Sampler {
    rng: ChaCha8Rng,
}

// Zero-biased so the sampled profiles hit the vanishing-coefficient
// branches of the classifiers often; a couple of non-integers keep the
// arithmetic honest about staying exact.
const COEFF_POOL: [(i64, i64); 12] = [
    (0, 1),
    (0, 1),
    (0, 1),
    (0, 1),
    (1, 1),
    (-1, 1),
    (2, 1),
    (-2, 1),
    (3, 1),
    (1, 2),
    (-1, 2),
    (5, 3),
];

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Uniform-ish draw below `n`; the modulo bias is irrelevant here,
    /// determinism is what matters.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.rng.next_u64() % n
    }

    pub fn coeff(&mut self) -> BigRational {
        let (n, d) = COEFF_POOL[self.below(COEFF_POOL.len() as u64) as usize];
        rat(n, d)
    }

    pub fn nonzero_coeff(&mut self) -> BigRational {
        // Skip the zero prefix of the pool.
        let (n, d) = COEFF_POOL[4 + self.below((COEFF_POOL.len() - 4) as u64) as usize];
        rat(n, d)
    }

    pub fn coeffs(&mut self, len: usize) -> Vec<BigRational> {
        (0..len).map(|_| self.coeff()).collect()
    }

    /// A coefficient profile with both sides of length up to `max_len`.
    pub fn profile(&mut self, max_len: usize) -> (Vec<BigRational>, Vec<BigRational>) {
        let lx = self.below(max_len as u64 + 1) as usize;
        let ly = self.below(max_len as u64 + 1) as usize;
        (self.coeffs(lx), self.coeffs(ly))
    }
}
