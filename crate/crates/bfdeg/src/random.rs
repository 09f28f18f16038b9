//! Seeded truth-table generator.
//!
//! Benchmarks and empirical distributions must be reproducible bit for bit
//! across platforms, so the word source is pinned to the splitmix64 mixing
//! function rather than whatever a general-purpose RNG crate currently
//! ships. One generator word feeds one truth-table word, functions in
//! sequence.

use alloc::vec::Vec;

use crate::bitpack::{word_count, PackedVector, MAX_DIMENSION};
use crate::error::{Error, Result};

/// The splitmix64 step: a Weyl sequence on the state, three xor-shift
/// multiplies on the output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_word(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// Iterator over `count` seeded random truth tables of dimension `n`.
///
/// Every function consumes exactly `max(1, 2^(n-6))` generator words, even
/// for n < 6 where the surplus high bits are masked off, so function t
/// always starts at generator word `t * words_per_function`.
#[derive(Debug, Clone)]
pub struct RandomFunctions {
    rng: SplitMix64,
    n: u32,
    remaining: u64,
}

impl RandomFunctions {
    pub fn new(n: u32, count: u64, seed: u64) -> Result<Self> {
        if n < 1 || n > MAX_DIMENSION {
            return Err(Error::DimensionOutOfRange { n, min: 1, max: MAX_DIMENSION });
        }
        Ok(Self { rng: SplitMix64::new(seed), n, remaining: count })
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }
}

impl Iterator for RandomFunctions {
    type Item = PackedVector;

    fn next(&mut self) -> Option<PackedVector> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let words: Vec<u64> = (0..word_count(self.n)).map(|_| self.rng.next_word()).collect();
        Some(PackedVector::from_words(self.n, words).expect("word count matches by construction"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).ok();
        (r.unwrap_or(usize::MAX), r)
    }
}
