//! Packed `2^n`-bit Boolean vectors stored in 64-bit words.
//!
//! A [`PackedVector`] holds a truth table, an ANF coefficient vector, or a
//! layer mask. Bit `i` (the value for cube coordinate `i`) lives in word
//! `i / 64` at bit position `i % 64`, least-significant-bit first. The
//! conventional serial-number reading, where coordinate 0 is the *most*
//! significant of the `2^n` bits, is applied only when rendering with
//! [`PackedVector::serial_number`] or [`PackedVector::to_hex`].

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Largest supported cube dimension; a `2^30`-bit vector occupies 128 MiB.
pub const MAX_DIMENSION: u32 = 30;

/// A cube coordinate, i.e. the serial number of an n-dimensional binary
/// vector; always in `[0, 2^n)`.
pub type Coordinate = usize;

/// Hamming weight of a coordinate viewed as an n-bit vector.
#[inline]
pub fn coordinate_weight(i: Coordinate) -> u32 {
    i.count_ones()
}

/// Number of 64-bit words backing a `2^n`-bit vector: `max(1, 2^(n-6))`.
#[inline]
pub fn word_count(n: u32) -> usize {
    if n < 6 {
        1
    } else {
        1usize << (n - 6)
    }
}

fn check_dimension(n: u32) -> Result<()> {
    if n > MAX_DIMENSION {
        return Err(Error::DimensionOutOfRange { n, min: 0, max: MAX_DIMENSION });
    }
    Ok(())
}

/// Mask of the valid bit positions inside a single word, for n < 6.
#[inline]
fn partial_word_mask(n: u32) -> u64 {
    debug_assert!(n < 6);
    (1u64 << (1u32 << n)) - 1
}

/// A `2^n`-bit Boolean vector packed into 64-bit words.
///
/// For `n < 6` the single backing word keeps its bits at positions `>= 2^n`
/// zero, so every word-at-a-time loop works unchanged on partial words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PackedVector {
    n: u32,
    words: Vec<u64>,
}

impl PackedVector {
    /// All-zeros vector of dimension `n`.
    pub fn zeros(n: u32) -> Result<Self> {
        check_dimension(n)?;
        Ok(Self { n, words: vec![0; word_count(n)] })
    }

    /// All-ones vector of dimension `n` (the constant one truth table).
    pub fn ones(n: u32) -> Result<Self> {
        check_dimension(n)?;
        let mut words = vec![u64::MAX; word_count(n)];
        if n < 6 {
            words[0] = partial_word_mask(n);
        }
        Ok(Self { n, words })
    }

    /// Builds a vector from raw words. The word count must be exactly
    /// `max(1, 2^(n-6))`; for `n < 6` bits at positions `>= 2^n` are
    /// discarded.
    pub fn from_words(n: u32, mut words: Vec<u64>) -> Result<Self> {
        check_dimension(n)?;
        let expected = word_count(n);
        if words.len() != expected {
            return Err(Error::WordCount { expected, found: words.len() });
        }
        if n < 6 {
            words[0] &= partial_word_mask(n);
        }
        Ok(Self { n, words })
    }

    /// Parses an ASCII '0'/'1' string, coordinate 0 first.
    pub fn from_text(bits: &str, n: u32) -> Result<Self> {
        check_dimension(n)?;
        let expected = 1usize << n;
        if bits.len() != expected {
            return Err(Error::TextLength { expected, found: bits.len() });
        }
        let mut v = Self::zeros(n)?;
        for (i, c) in bits.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set_bit(i, true),
                other => return Err(Error::TextChar { position: i, found: other }),
            }
        }
        Ok(v)
    }

    /// Renders the vector as an ASCII '0'/'1' string, coordinate 0 first.
    pub fn render_text(&self) -> String {
        let mut s = String::with_capacity(self.bit_len());
        for i in 0..self.bit_len() {
            s.push(if self.bit(i) { '1' } else { '0' });
        }
        s
    }

    /// Cube dimension n.
    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of bits, `2^n`.
    #[inline]
    pub fn bit_len(&self) -> usize {
        1usize << self.n
    }

    /// Backing words, least-significant coordinates first.
    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    /// Bit stored for coordinate `i`.
    ///
    /// Panics if `i >= 2^n`.
    #[inline]
    pub fn bit(&self, i: Coordinate) -> bool {
        assert!(i < self.bit_len(), "coordinate {i} out of range for n = {}", self.n);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    /// Sets the bit for coordinate `i`.
    ///
    /// Panics if `i >= 2^n`.
    #[inline]
    pub fn set_bit(&mut self, i: Coordinate, value: bool) {
        assert!(i < self.bit_len(), "coordinate {i} out of range for n = {}", self.n);
        let mask = 1u64 << (i & 63);
        if value {
            self.words[i >> 6] |= mask;
        } else {
            self.words[i >> 6] &= !mask;
        }
    }

    /// Hamming weight: the number of set bits.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Weight parity, computed by XOR-folding all words and taking the
    /// popcount parity of the fold; no full count is performed.
    pub fn parity(&self) -> bool {
        let fold = self.words.iter().fold(0u64, |acc, w| acc ^ w);
        fold.count_ones() & 1 == 1
    }

    /// True if no bit is set.
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Serial number of the vector as an exact decimal string: the integer
    /// whose `2^n`-digit binary representation reads coordinate 0 as the
    /// most significant bit.
    pub fn serial_number(&self) -> String {
        if self.n < 6 {
            let bits = 1u32 << self.n;
            let value = self.words[0].reverse_bits() >> (64 - bits);
            return BigUint::from(value).to_string();
        }
        // Reversing word order and the bits inside each word turns the
        // coordinate-0-first reading into a little-endian integer.
        let mut bytes = Vec::with_capacity(self.words.len() * 8);
        for w in self.words.iter().rev() {
            bytes.extend_from_slice(&w.reverse_bits().to_le_bytes());
        }
        BigUint::from_bytes_le(&bytes).to_string()
    }

    /// Uppercase hexadecimal rendering of the serial-number reading:
    /// coordinate 0 is the top bit of the most significant (leftmost) hex
    /// digit. Used for masks too wide for decimal display.
    pub fn to_hex(&self) -> String {
        if self.n < 6 {
            let bits = 1u32 << self.n;
            let digits = self.bit_len().div_ceil(4);
            // Left-align within the digit group so coordinate 0 stays on top.
            let value = self.words[0].reverse_bits() >> (64 - bits) << (4 * digits as u32 - bits);
            let mut s = String::new();
            let _ = write!(s, "{value:0width$X}", width = digits);
            return s;
        }
        let mut s = String::with_capacity(self.words.len() * 16);
        for w in &self.words {
            let _ = write!(s, "{:016X}", w.reverse_bits());
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn word_counts() {
        assert_eq!(word_count(0), 1);
        assert_eq!(word_count(5), 1);
        assert_eq!(word_count(6), 1);
        assert_eq!(word_count(7), 2);
        assert_eq!(word_count(10), 16);
    }

    #[test]
    fn zeros_and_ones() {
        let z = PackedVector::zeros(5).unwrap();
        assert_eq!(z.weight(), 0);
        assert!(!z.parity());
        let o = PackedVector::ones(5).unwrap();
        assert_eq!(o.weight(), 32);
        assert!(!o.parity());
        assert_eq!(o.words()[0], 0xFFFF_FFFF);
        assert!(PackedVector::zeros(31).is_err());
    }

    #[test]
    fn example_anf_bits() {
        // The worked 4-variable example vector: ones at 0, 3, 5, 6, 8, 10, 12.
        let v = PackedVector::from_text("1001011010101000", 4).unwrap();
        assert!(!PackedVector::zeros(4).unwrap().bit(7));
        assert!(v.bit(12));
        assert!(!v.bit(15));
        assert_eq!(v.weight(), 7);
        assert!(v.parity());
    }

    #[test]
    fn single_set_bit_has_odd_parity() {
        for n in 0..=8 {
            let mut v = PackedVector::zeros(n).unwrap();
            v.set_bit((1usize << n) - 1, true);
            assert!(v.parity());
            assert_eq!(v.weight(), 1);
        }
    }

    #[test]
    fn from_text_errors() {
        assert_eq!(
            PackedVector::from_text("0110", 3),
            Err(Error::TextLength { expected: 8, found: 4 })
        );
        assert_eq!(
            PackedVector::from_text("01x0", 2),
            Err(Error::TextChar { position: 2, found: 'x' })
        );
        let v = PackedVector::from_text("0110", 2).unwrap();
        assert!(!v.bit(0) && v.bit(1) && v.bit(2) && !v.bit(3));
    }

    #[test]
    fn from_words_masks_partial_word() {
        let v = PackedVector::from_words(4, vec![u64::MAX]).unwrap();
        assert_eq!(v.weight(), 16);
        assert_eq!(v.words()[0], 0xFFFF);
        assert_eq!(
            PackedVector::from_words(7, vec![0]),
            Err(Error::WordCount { expected: 2, found: 1 })
        );
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn bit_out_of_range_panics() {
        let v = PackedVector::zeros(4).unwrap();
        let _ = v.bit(16);
    }

    #[test]
    fn serial_number_fixtures() {
        // Masks read straight from the reference table.
        let m42 = PackedVector::from_text("0001011001101000", 4).unwrap();
        assert_eq!(m42.serial_number(), "5736");
        let mut m50 = PackedVector::zeros(5).unwrap();
        m50.set_bit(0, true);
        assert_eq!(m50.serial_number(), "2147483648");
        assert_eq!(PackedVector::zeros(7).unwrap().serial_number(), "0");
    }

    #[test]
    fn serial_number_single_bit() {
        // A lone coordinate i reads as 2^(2^n - 1 - i).
        for n in 0..=5u32 {
            let len = 1usize << n;
            for i in 0..len {
                let mut v = PackedVector::zeros(n).unwrap();
                v.set_bit(i, true);
                let expected = BigUint::from(1u8) << (len - 1 - i);
                assert_eq!(v.serial_number(), expected.to_string(), "n={n} i={i}");
            }
        }
        // Wide case crossing word boundaries.
        let mut v = PackedVector::zeros(7).unwrap();
        v.set_bit(0, true);
        assert_eq!(v.serial_number(), (BigUint::from(1u8) << 127u32).to_string());
    }

    #[test]
    fn hex_rendering() {
        let mut v = PackedVector::zeros(6).unwrap();
        v.set_bit(0, true);
        assert_eq!(v.to_hex(), "8000000000000000");
        let mut w = PackedVector::zeros(7).unwrap();
        w.set_bit(127, true);
        assert_eq!(w.to_hex(), "00000000000000000000000000000001");
        let m42 = PackedVector::from_text("0001011001101000", 4).unwrap();
        assert_eq!(m42.to_hex(), "1668");
    }

    fn arb_vector(max_n: u32) -> impl Strategy<Value = PackedVector> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<u64>(), word_count(n))
                .prop_map(move |words| PackedVector::from_words(n, words).unwrap())
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(v in arb_vector(9)) {
            let back = PackedVector::from_text(&v.render_text(), v.n()).unwrap();
            prop_assert_eq!(back, v);
        }

        #[test]
        fn weight_matches_bit_scan(v in arb_vector(8)) {
            let counted = (0..v.bit_len()).filter(|&i| v.bit(i)).count() as u64;
            prop_assert_eq!(v.weight(), counted);
        }

        #[test]
        fn parity_is_weight_mod_2(v in arb_vector(9)) {
            prop_assert_eq!(v.parity(), v.weight() % 2 == 1);
        }
    }
}
