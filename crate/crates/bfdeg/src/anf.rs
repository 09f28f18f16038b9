//! The ANF transform in byte-wise and bitwise form.
//!
//! Both directions of the truth-table/ANF correspondence are the same
//! involutive butterfly: at level d, every position whose bit d is clear
//! XOR-accumulates into its partner 2^d above. The byte-wise variant works
//! on one value per byte; the bitwise variant runs the low six levels inside
//! each 64-bit word with constant masks and the remaining levels as whole
//! word XORs. [`mobius_coefficient_oracle`] recovers single coefficients by
//! subset sums and serves as the independent reference for both.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitpack::{Coordinate, PackedVector, MAX_DIMENSION};
use crate::error::{Error, Result};

/// One truth-table or ANF value per byte, each 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ByteVector {
    n: u32,
    values: Vec<u8>,
}

impl ByteVector {
    pub fn zeros(n: u32) -> Result<Self> {
        if n > MAX_DIMENSION {
            return Err(Error::DimensionOutOfRange { n, min: 0, max: MAX_DIMENSION });
        }
        Ok(Self { n, values: vec![0; 1usize << n] })
    }

    /// Validates length `2^n` and that every entry is 0 or 1.
    pub fn from_values(n: u32, values: Vec<u8>) -> Result<Self> {
        if n > MAX_DIMENSION {
            return Err(Error::DimensionOutOfRange { n, min: 0, max: MAX_DIMENSION });
        }
        let expected = 1usize << n;
        if values.len() != expected {
            return Err(Error::WordCount { expected, found: values.len() });
        }
        if let Some(position) = values.iter().position(|&b| b > 1) {
            return Err(Error::ByteValue { position, found: values[position] });
        }
        Ok(Self { n, values })
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn values(&self) -> &[u8] {
        &self.values
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Expands a packed vector to one byte per coordinate.
pub fn unpack(v: &PackedVector) -> ByteVector {
    let mut values = Vec::with_capacity(v.bit_len());
    for &w in v.words() {
        for b in 0..64 {
            values.push(((w >> b) & 1) as u8);
        }
    }
    values.truncate(v.bit_len());
    ByteVector { n: v.n(), values }
}

/// Packs one-byte-per-coordinate values back into words.
pub fn pack(b: &ByteVector) -> PackedVector {
    let mut v = PackedVector::zeros(b.n).expect("dimension already validated");
    let words = v.words_mut();
    for (i, &value) in b.values.iter().enumerate() {
        words[i >> 6] |= u64::from(value) << (i & 63);
    }
    v
}

/// In-place byte-wise butterfly, level order 2^0, 2^1, .., 2^(n-1).
pub fn anft_bytewise_in_place(v: &mut ByteVector) {
    let len = v.values.len();
    let mut stride = 1;
    while stride < len {
        let mut base = 0;
        while base < len {
            for i in base..base + stride {
                v.values[i + stride] ^= v.values[i];
            }
            base += 2 * stride;
        }
        stride *= 2;
    }
}

/// Copying wrapper around [`anft_bytewise_in_place`].
pub fn anft_bytewise(v: &ByteVector) -> ByteVector {
    let mut out = v.clone();
    anft_bytewise_in_place(&mut out);
    out
}

const fn level_mask(d: u32) -> u64 {
    let mut mask = 0u64;
    let mut p = 0u64;
    while p < 64 {
        if p & (1 << d) == 0 {
            mask |= 1 << p;
        }
        p += 1;
    }
    mask
}

/// In-word butterfly masks: bit p of `LEVEL_MASKS[d]` is set when bit d of p
/// is clear, so `(w & mask) << 2^d` lands every source bit on its partner.
const LEVEL_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

// Guard against a packing-convention mistake: the literals must equal the
// masks derived from the bit-d-clear predicate.
const _: () = {
    let mut d = 0;
    while d < 6 {
        assert!(LEVEL_MASKS[d as usize] == level_mask(d));
        d += 1;
    }
};

/// In-place bitwise butterfly on packed words.
pub fn anft_bitwise_in_place(v: &mut PackedVector) {
    let n = v.n();
    let words = v.words_mut();
    for d in 0..n.min(6) {
        let mask = LEVEL_MASKS[d as usize];
        let shift = 1u32 << d;
        for w in words.iter_mut() {
            *w ^= (*w & mask) << shift;
        }
    }
    for d in 6..n {
        let stride = 1usize << (d - 6);
        let mut base = 0;
        while base < words.len() {
            for u in base..base + stride {
                words[u + stride] ^= words[u];
            }
            base += 2 * stride;
        }
    }
}

/// Copying wrapper around [`anft_bitwise_in_place`].
pub fn anft_bitwise(v: &PackedVector) -> PackedVector {
    let mut out = v.clone();
    anft_bitwise_in_place(&mut out);
    out
}

/// ANF coefficient of the monomial `gamma`, as the XOR of the truth-table
/// values over all inputs covered by `gamma`. Quadratic overall; reference
/// implementation for tests only.
pub fn mobius_coefficient_oracle(tt: &ByteVector, gamma: Coordinate) -> u8 {
    assert!(gamma < tt.len(), "coordinate {gamma} out of range for n = {}", tt.n);
    let mut acc = 0u8;
    let mut sub = gamma;
    loop {
        acc ^= tt.values[sub];
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & gamma;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitpack::word_count;
    use proptest::prelude::*;

    fn byte_vector_of_bits(n: u32, bits: u64) -> ByteVector {
        let values = (0..1usize << n).map(|i| ((bits >> i) & 1) as u8).collect();
        ByteVector::from_values(n, values).unwrap()
    }

    #[test]
    fn constant_functions() {
        let ones = ByteVector::from_values(3, vec![1; 8]).unwrap();
        let anf = anft_bytewise(&ones);
        assert_eq!(anf.values(), [1, 0, 0, 0, 0, 0, 0, 0]);
        let zeros = ByteVector::zeros(3).unwrap();
        assert_eq!(anft_bytewise(&zeros), zeros);

        let packed_ones = PackedVector::ones(6).unwrap();
        let mut expected = PackedVector::zeros(6).unwrap();
        expected.set_bit(0, true);
        assert_eq!(anft_bitwise(&packed_ones), expected);
    }

    #[test]
    fn xor_function_is_its_own_anf() {
        let tt = ByteVector::from_values(2, vec![0, 1, 1, 0]).unwrap();
        assert_eq!(anft_bytewise(&tt), tt);
        assert_eq!(mobius_coefficient_oracle(&tt, 1), 1);
        assert_eq!(mobius_coefficient_oracle(&tt, 2), 1);
        assert_eq!(mobius_coefficient_oracle(&tt, 3), 0);
    }

    #[test]
    fn oracle_on_constant_one() {
        let ones = ByteVector::from_values(2, vec![1; 4]).unwrap();
        assert_eq!(mobius_coefficient_oracle(&ones, 0), 1);
        assert_eq!(mobius_coefficient_oracle(&ones, 3), 0);
    }

    #[test]
    fn from_values_validation() {
        assert_eq!(
            ByteVector::from_values(2, vec![0, 1, 2, 0]),
            Err(Error::ByteValue { position: 2, found: 2 })
        );
        assert_eq!(
            ByteVector::from_values(2, vec![0, 1]),
            Err(Error::WordCount { expected: 4, found: 2 })
        );
    }

    #[test]
    fn exhaustive_small_dimensions() {
        // Every function for n <= 4: involution of both transforms,
        // byte/bit agreement, and full oracle equivalence at n <= 3.
        for n in 0..=4u32 {
            let len = 1usize << n;
            for bits in 0u64..1 << len {
                let tt = byte_vector_of_bits(n, bits);
                let anf = anft_bytewise(&tt);
                assert_eq!(anft_bytewise(&anf), tt, "involution n={n} bits={bits:#x}");

                let packed = pack(&tt);
                let packed_anf = anft_bitwise(&packed);
                assert_eq!(packed_anf, pack(&anf), "byte/bit n={n} bits={bits:#x}");
                assert_eq!(anft_bitwise(&packed_anf), packed);

                if n <= 3 {
                    for gamma in 0..len {
                        assert_eq!(
                            anf.values()[gamma],
                            mobius_coefficient_oracle(&tt, gamma),
                            "oracle n={n} bits={bits:#x} gamma={gamma}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_equivalence_n4_sampled() {
        // All 2^16 functions is acceptance-test territory; sample a stripe.
        for bits in (0u64..1 << 16).step_by(97) {
            let tt = byte_vector_of_bits(4, bits);
            let anf = anft_bytewise(&tt);
            for gamma in 0..16 {
                assert_eq!(anf.values()[gamma], mobius_coefficient_oracle(&tt, gamma));
            }
        }
    }

    fn arb_packed(ns: &'static [u32]) -> impl Strategy<Value = PackedVector> {
        proptest::sample::select(ns).prop_flat_map(|n| {
            proptest::collection::vec(any::<u64>(), word_count(n))
                .prop_map(move |words| PackedVector::from_words(n, words).unwrap())
        })
    }

    proptest! {
        #[test]
        fn pack_unpack_round_trip(v in arb_packed(&[0, 1, 4, 6, 7, 9])) {
            prop_assert_eq!(pack(&unpack(&v)), v);
        }

        #[test]
        fn bitwise_matches_bytewise(v in arb_packed(&[1, 3, 6, 7, 8, 9])) {
            let expected = pack(&anft_bytewise(&unpack(&v)));
            prop_assert_eq!(anft_bitwise(&v), expected);
        }

        #[test]
        fn bitwise_involution(v in arb_packed(&[2, 5, 6, 8, 10])) {
            prop_assert_eq!(anft_bitwise(&anft_bitwise(&v)), v);
        }

        #[test]
        fn linear_over_xor(
            (x, y) in proptest::sample::select(&[1u32, 4, 6, 8][..]).prop_flat_map(|n| {
                let w = word_count(n);
                (
                    proptest::collection::vec(any::<u64>(), w),
                    proptest::collection::vec(any::<u64>(), w),
                ).prop_map(move |(a, b)| {
                    (
                        PackedVector::from_words(n, a).unwrap(),
                        PackedVector::from_words(n, b).unwrap(),
                    )
                })
            })
        ) {
            let xor = PackedVector::from_words(
                x.n(),
                x.words().iter().zip(y.words()).map(|(a, b)| a ^ b).collect(),
            ).unwrap();
            let expected = PackedVector::from_words(
                x.n(),
                anft_bitwise(&x)
                    .words()
                    .iter()
                    .zip(anft_bitwise(&y).words())
                    .map(|(a, b)| a ^ b)
                    .collect(),
            ).unwrap();
            prop_assert_eq!(anft_bitwise(&xor), expected);
        }
    }
}
