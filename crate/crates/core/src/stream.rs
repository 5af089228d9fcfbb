//! Portable seeded pseudorandom stream.
//!
//! Backed by ChaCha8 with an explicit key layout and our own bounded
//! sampling, so outputs are identical on every platform and do not depend on
//! the sampling internals of any particular `rand` release.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

#[derive(Debug, Clone)]
pub struct SeededStream {
    rng: ChaCha8Rng,
}

impl SeededStream {
    /// A stream keyed by a domain tag and two parameters.
    pub fn new(domain: u64, a: u64, b: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&domain.to_le_bytes());
        key[8..16].copy_from_slice(&a.to_le_bytes());
        key[16..24].copy_from_slice(&b.to_le_bytes());
        Self {
            rng: ChaCha8Rng::from_seed(key),
        }
    }

    /// Uniform value in `0..bound` by rejection sampling. `bound` must be
    /// non-zero and fit in `u32`.
    pub fn below(&mut self, bound: u32) -> u32 {
        assert!(bound > 0, "empty range");
        let zone = u32::MAX - (u32::MAX % bound);
        loop {
            let x = self.rng.next_u32();
            if x < zone {
                return x % bound;
            }
        }
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.below(u32::try_from(len).expect("range fits in u32")) as usize
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.index(i + 1);
            items.swap(i, j);
        }
    }
}

pub(crate) const DOMAIN_SEQUENCE: u64 = 0x5358_5545_4e43_4531; // "SXUENCE1"
pub(crate) const DOMAIN_TRIANGULATION: u64 = 0x5452_4941_4e47_4c31;
pub(crate) const DOMAIN_PERMUTATION: u64 = 0x5045_524d_5554_4531;
