//! Named random streams derived from a single run seed.
//!
//! Every randomized component asks for its own substream by name, so adding
//! or reordering components never perturbs the draws seen by the others.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The generator used throughout the crate.
pub type Rng = ChaCha8Rng;

/// A splittable seed: `SeedStream::new(seed).derive("regsearch")`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeedStream {
    seed: u64,
}

impl SeedStream {
    pub fn new(seed: u64) -> Self {
        SeedStream { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Substream keyed by a component name.
    pub fn derive(&self, name: &str) -> SeedStream {
        SeedStream {
            seed: splitmix64(self.seed ^ fnv1a(name.as_bytes())),
        }
    }

    /// Substream keyed by an integer, e.g. a worker id or a stripe index.
    pub fn derive_index(&self, index: u64) -> SeedStream {
        SeedStream {
            seed: splitmix64(self.seed.wrapping_add(splitmix64(index.wrapping_add(0x9e37_79b9)))),
        }
    }

    pub fn rng(&self) -> Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}
