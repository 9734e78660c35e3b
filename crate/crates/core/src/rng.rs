//! Seeded, reproducible random streams.
//!
//! Every stochastic operation in the toolkit draws from a ChaCha8 generator
//! seeded through [`RngSeed`]. The generator choice is pinned: ChaCha8 has a
//! portable, version-stable output stream, so golden artifacts regenerate
//! bit-identically on any platform. Independent sub-streams (per capture
//! group, per role) are derived with [`RngSeed::derive`] rather than by
//! sharing one generator, which keeps results independent of execution order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// A 64-bit seed identifying one random stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RngSeed(pub u64);

impl RngSeed {
    pub fn new(value: u64) -> Self {
        RngSeed(value)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// The ChaCha8 stream for this seed.
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// Derives an independent sub-seed by folding tag words into this seed
    /// with the SplitMix64 finalizer. Same seed and tags, same sub-seed.
    pub fn derive(self, tags: &[u64]) -> RngSeed {
        let mut state = mix64(self.0);
        for &tag in tags {
            state = mix64(state ^ mix64(tag));
        }
        RngSeed(state)
    }
}

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
#[inline]
fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn same_seed_same_stream() {
        let mut a = RngSeed::new(42).rng();
        let mut b = RngSeed::new(42).rng();
        for _ in 0..10_000 {
            assert_eq!(a.random::<u64>(), b.random::<u64>());
        }
    }

    #[test]
    fn derived_streams_differ_from_parent_and_each_other() {
        let root = RngSeed::new(7);
        let d0 = root.derive(&[0, 1]);
        let d1 = root.derive(&[1, 1]);
        let d2 = root.derive(&[0, 2]);
        assert_ne!(d0, d1);
        assert_ne!(d0, d2);
        assert_ne!(d1, d2);
        assert_ne!(d0.0, root.0);
    }

    #[test]
    fn derivation_is_stable() {
        // Frozen so artifact regeneration stays byte-identical.
        let a = RngSeed::new(0).derive(&[3, 1]);
        let b = RngSeed::new(0).derive(&[3, 1]);
        assert_eq!(a, b);
    }
}
