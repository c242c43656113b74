//! Reproducible random source for instance generation.
//!
//! The stream is xoshiro256** seeded through SplitMix64 (the reference
//! seeding procedure of the xoshiro family). Derived draws are defined
//! bit-exactly so that other implementations can regenerate the same graphs:
//!
//! * `unit()` = `(next_u64() >> 11) * 2^-53`, a uniform value in `[0, 1)`;
//! * `bernoulli(p)` = `unit() < p`;
//! * `below(b)` = `next_u64() % b`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

#[derive(Clone, Debug)]
pub struct GraphRng {
    inner: Xoshiro256StarStar,
}

impl GraphRng {
    pub fn new(seed: u64) -> Self {
        GraphRng {
            inner: Xoshiro256StarStar::seed_from_u64(seed),
        }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    #[inline]
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    #[inline]
    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.unit() < p
    }

    /// Uniform-ish integer in `[0, bound)`; modulo reduction, bias is
    /// negligible for the vertex counts used here.
    #[inline]
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        self.next_u64() % bound
    }
}
