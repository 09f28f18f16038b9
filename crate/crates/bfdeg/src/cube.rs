//! Weight-lexicographic order machinery.
//!
//! Coordinates of the n-dimensional cube are ordered first by Hamming
//! weight, then numerically inside each weight class. [`WloSequence`] holds
//! that permutation with its layer boundaries; [`MaskSet`] holds the same
//! partition as packed bit masks, one per weight.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitpack::{coordinate_weight, word_count, Coordinate, PackedVector, MAX_DIMENSION};
use crate::error::{Error, Result};

/// Exact binomial coefficient via Pascal's triangle; every intermediate
/// value is bounded by the result, so u64 arithmetic cannot overflow for
/// n <= 60.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n || n > 60 {
        return Err(Error::BinomialDomain { n, k });
    }
    let mut row = vec![0u64; n as usize + 1];
    row[0] = 1;
    for i in 1..=n as usize {
        for j in (1..=i).rev() {
            row[j] += row[j - 1];
        }
    }
    Ok(row[k as usize])
}

fn check_sequence_dimension(n: u32) -> Result<()> {
    if n < 1 || n > MAX_DIMENSION {
        return Err(Error::DimensionOutOfRange { n, min: 1, max: MAX_DIMENSION });
    }
    Ok(())
}

/// The weight-lexicographic permutation of `{0, .., 2^n - 1}` together with
/// the offsets of its n+1 weight layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WloSequence {
    n: u32,
    order: Vec<Coordinate>,
    layer_offsets: Vec<usize>,
}

impl WloSequence {
    /// Builds the sequence bottom-up from dimension 1: each layer of level m
    /// is the same layer of level m-1 followed by the previous layer shifted
    /// up by 2^(m-1). Only the previous level is kept in memory.
    pub fn generate(n: u32) -> Result<Self> {
        check_sequence_dimension(n)?;
        let mut layers: Vec<Vec<Coordinate>> = vec![vec![0], vec![1]];
        for m in 2..=n {
            let half = 1usize << (m - 1);
            let prev = layers;
            layers = Vec::with_capacity(m as usize + 1);
            for k in 0..=m as usize {
                let lower = prev.get(k).map(Vec::as_slice).unwrap_or(&[]);
                let upper = if k > 0 { prev[k - 1].as_slice() } else { &[] };
                let mut slice = Vec::with_capacity(lower.len() + upper.len());
                slice.extend_from_slice(lower);
                slice.extend(upper.iter().map(|&c| c + half));
                layers.push(slice);
            }
        }

        let mut order = Vec::with_capacity(1usize << n);
        let mut layer_offsets = Vec::with_capacity(n as usize + 2);
        layer_offsets.push(0);
        for layer in &layers {
            order.extend_from_slice(layer);
            layer_offsets.push(order.len());
        }
        Ok(Self { n, order, layer_offsets })
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The full permutation, weight classes in increasing order.
    #[inline]
    pub fn order(&self) -> &[Coordinate] {
        &self.order
    }

    /// n+2 offsets into [`Self::order`]; entry k starts layer k and the last
    /// entry is 2^n.
    #[inline]
    pub fn layer_offsets(&self) -> &[usize] {
        &self.layer_offsets
    }

    /// The coordinates of weight `k`, in increasing numeric order.
    pub fn layer(&self, k: u32) -> Result<&[Coordinate]> {
        if k > self.n {
            return Err(Error::DegreeClassOutOfRange { n: self.n, k });
        }
        let k = k as usize;
        Ok(&self.order[self.layer_offsets[k]..self.layer_offsets[k + 1]])
    }

    /// Weight class of the coordinate stored at `position` in the order,
    /// found by binary search over the layer offsets.
    pub(crate) fn layer_of_position(&self, position: usize) -> u32 {
        debug_assert!(position < self.order.len());
        match self.layer_offsets.binary_search(&position) {
            Ok(k) => k as u32,
            Err(k) => (k - 1) as u32,
        }
    }
}

/// The n+1 weight-layer masks of dimension n; bit i of `masks()[k]` is set
/// exactly when coordinate i has weight k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaskSet {
    n: u32,
    masks: Vec<PackedVector>,
}

impl MaskSet {
    /// Builds the masks by the doubling recurrence: the level-m mask for
    /// weight k is the level-(m-1) mask for k in the lower coordinate half
    /// and the level-(m-1) mask for k-1 in the upper half. While a level
    /// still fits one word the halves combine by shift-OR; from 128 bits on
    /// the word vectors concatenate.
    pub fn generate(n: u32) -> Result<Self> {
        check_sequence_dimension(n)?;
        let mut level: Vec<Vec<u64>> = vec![vec![0b01], vec![0b10]];
        for m in 2..=n {
            let prev = level;
            level = Vec::with_capacity(m as usize + 1);
            for k in 0..=m as usize {
                let lower = prev.get(k).map(Vec::as_slice);
                let upper = k.checked_sub(1).map(|j| prev[j].as_slice());
                let words = if m <= 6 {
                    let half_bits = 1u32 << (m - 1);
                    let lo = lower.map_or(0, |w| w[0]);
                    let hi = upper.map_or(0, |w| w[0]);
                    vec![lo | hi << half_bits]
                } else {
                    let half_words = word_count(m - 1);
                    let mut w = vec![0u64; 2 * half_words];
                    if let Some(v) = lower {
                        w[..half_words].copy_from_slice(v);
                    }
                    if let Some(v) = upper {
                        w[half_words..].copy_from_slice(v);
                    }
                    w
                };
                level.push(words);
            }
        }
        let masks = level
            .into_iter()
            .map(|words| PackedVector::from_words(n, words))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, masks })
    }

    /// Direct construction classifying every coordinate by popcount; the
    /// independent cross-check for [`MaskSet::generate`].
    pub fn by_weight_classes(n: u32) -> Result<Self> {
        check_sequence_dimension(n)?;
        let mut masks = Vec::with_capacity(n as usize + 1);
        for _ in 0..=n {
            masks.push(PackedVector::zeros(n)?);
        }
        for i in 0..1usize << n {
            masks[coordinate_weight(i) as usize].set_bit(i, true);
        }
        Ok(Self { n, masks })
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    /// All masks, index = weight class.
    #[inline]
    pub fn masks(&self) -> &[PackedVector] {
        &self.masks
    }

    /// The mask for weight class `k`.
    pub fn mask(&self, k: u32) -> Result<&PackedVector> {
        self.masks
            .get(k as usize)
            .ok_or(Error::DegreeClassOutOfRange { n: self.n, k })
    }

    /// Decimal serial numbers of all masks, weight class 0 first.
    pub fn serial_numbers(&self) -> Vec<String> {
        self.masks.iter().map(PackedVector::serial_number).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), Ok(6));
        assert_eq!(binomial(10, 5), Ok(252));
        assert_eq!(binomial(0, 0), Ok(1));
        assert_eq!(binomial(60, 30), Ok(118_264_581_564_861_424));
        let row_sum: u64 = (0..=5).map(|k| binomial(5, k).unwrap()).sum();
        assert_eq!(row_sum, 32);
        assert_eq!(binomial(3, 4), Err(Error::BinomialDomain { n: 3, k: 4 }));
        assert_eq!(binomial(61, 0), Err(Error::BinomialDomain { n: 61, k: 0 }));
    }

    #[test]
    fn wlo_small_orders() {
        assert_eq!(WloSequence::generate(1).unwrap().order(), [0, 1]);
        assert_eq!(WloSequence::generate(2).unwrap().order(), [0, 1, 2, 3]);
        assert_eq!(WloSequence::generate(3).unwrap().order(), [0, 1, 2, 4, 3, 5, 6, 7]);
        assert_eq!(
            WloSequence::generate(4).unwrap().order(),
            [0, 1, 2, 4, 8, 3, 5, 6, 9, 10, 12, 7, 11, 13, 14, 15]
        );
        assert_eq!(
            WloSequence::generate(5).unwrap().order(),
            [
                0, 1, 2, 4, 8, 16, 3, 5, 6, 9, 10, 12, 17, 18, 20, 24, 7, 11, 13, 14, 19, 21,
                22, 25, 26, 28, 15, 23, 27, 29, 30, 31
            ]
        );
        assert!(WloSequence::generate(0).is_err());
        assert!(WloSequence::generate(31).is_err());
    }

    #[test]
    fn layer_views() {
        let seq = WloSequence::generate(4).unwrap();
        assert_eq!(seq.layer(0).unwrap(), [0]);
        assert_eq!(seq.layer(2).unwrap(), [3, 5, 6, 9, 10, 12]);
        assert_eq!(seq.layer(4).unwrap(), [15]);
        assert_eq!(seq.layer(5), Err(Error::DegreeClassOutOfRange { n: 4, k: 5 }));
        assert_eq!(seq.layer_offsets(), [0, 1, 5, 11, 15, 16]);
    }

    #[test]
    fn layer_of_position_matches_offsets() {
        for n in 1..=8 {
            let seq = WloSequence::generate(n).unwrap();
            for pos in 0..seq.order().len() {
                let k = seq.layer_of_position(pos);
                assert_eq!(coordinate_weight(seq.order()[pos]), k, "n={n} pos={pos}");
            }
        }
    }

    #[test]
    fn mask_serial_numbers() {
        let table: [(u32, &[&str]); 5] = [
            (1, &["2", "1"]),
            (2, &["8", "6", "1"]),
            (3, &["128", "104", "22", "1"]),
            (4, &["32768", "26752", "5736", "278", "1"]),
            (5, &["2147483648", "1753251840", "375941248", "18224744", "65814", "1"]),
        ];
        for (n, expected) in table {
            let serials = MaskSet::generate(n).unwrap().serial_numbers();
            assert_eq!(serials, *expected, "n={n}");
        }
    }

    #[test]
    fn mask_constructions_agree() {
        for n in 1..=12 {
            let rec = MaskSet::generate(n).unwrap();
            let direct = MaskSet::by_weight_classes(n).unwrap();
            assert_eq!(rec, direct, "n={n}");
        }
    }

    #[test]
    fn masks_partition_the_cube() {
        for n in 1..=10u32 {
            let set = MaskSet::generate(n).unwrap();
            let mut seen = PackedVector::zeros(n).unwrap();
            for (k, mask) in set.masks().iter().enumerate() {
                assert_eq!(mask.weight(), binomial(n as u64, k as u64).unwrap(), "n={n} k={k}");
                for (s, m) in seen.words().iter().zip(mask.words()) {
                    assert_eq!(s & m, 0, "masks overlap at n={n} k={k}");
                }
                for (s, m) in seen.words_mut().iter_mut().zip(mask.words()) {
                    *s |= m;
                }
            }
            assert_eq!(seen, PackedVector::ones(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn masks_match_wlo_layers() {
        for n in 1..=12u32 {
            let seq = WloSequence::generate(n).unwrap();
            let set = MaskSet::generate(n).unwrap();
            for k in 0..=n {
                let mask = set.mask(k).unwrap();
                let layer = seq.layer(k).unwrap();
                let from_layer = {
                    let mut v = PackedVector::zeros(n).unwrap();
                    for &c in layer {
                        v.set_bit(c, true);
                    }
                    v
                };
                assert_eq!(*mask, from_layer, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn lower_order_is_prefix_of_each_layer() {
        for n in 2..=10u32 {
            let prev = WloSequence::generate(n - 1).unwrap();
            let cur = WloSequence::generate(n).unwrap();
            for k in 0..n {
                let small = prev.layer(k).unwrap();
                let large = cur.layer(k).unwrap();
                assert_eq!(&large[..small.len()], small, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn single_bit_mask_serials_are_powers_of_two() {
        // The extreme masks pick out coordinate 0 and coordinate 2^n - 1.
        for n in 1..=7u32 {
            let set = MaskSet::generate(n).unwrap();
            let top = num_bigint::BigUint::from(1u8) << ((1usize << n) - 1);
            assert_eq!(set.mask(0).unwrap().serial_number(), top.to_string());
            assert_eq!(set.mask(n).unwrap().serial_number(), "1");
        }
    }

    proptest! {
        #[test]
        fn order_is_a_weight_monotone_permutation(n in 1u32..=12) {
            let seq = WloSequence::generate(n).unwrap();
            let len = 1usize << n;
            prop_assert_eq!(seq.order().len(), len);

            let mut seen = vec![false; len];
            let mut prev_weight = 0;
            for (pos, &c) in seq.order().iter().enumerate() {
                prop_assert!(c < len);
                prop_assert!(!seen[c]);
                seen[c] = true;
                let w = coordinate_weight(c);
                prop_assert!(w >= prev_weight, "weight dropped at position {}", pos);
                prev_weight = w;
            }
        }

        #[test]
        fn layers_strictly_increase(n in 1u32..=12) {
            let seq = WloSequence::generate(n).unwrap();
            for k in 0..=n {
                let layer = seq.layer(k).unwrap();
                prop_assert_eq!(layer.len() as u64, binomial(n as u64, k as u64).unwrap());
                for pair in layer.windows(2) {
                    prop_assert!(pair[0] < pair[1]);
                }
                for &c in layer {
                    prop_assert_eq!(coordinate_weight(c), k);
                }
            }
        }
    }
}
