//! How algebraic degrees are distributed over all functions of n variables.
//!
//! The count of degree-k functions has the closed form
//! `(2^C(n,k) - 1) * 2^(C(n,0) + .. + C(n,k-1))`: the coefficients of weight
//! k must not all vanish, lower-weight coefficients are free, higher-weight
//! ones are zero. Probabilities divide by `2^(2^n)`, which collapses to a
//! product of powers of two that floating point can evaluate without ever
//! forming the huge numerator.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::bitpack::MAX_DIMENSION;
use crate::cube::binomial;
use crate::degree::{Degree, DegreePipeline, PipelineOptions, SearchAlgorithm};
use crate::error::{Error, Result};
use crate::random::RandomFunctions;

/// Exact `2^-e` for e >= 0, including the subnormal range, without any
/// floating-point math: the bit pattern is built directly.
fn exp2_neg(e: u64) -> f64 {
    if e <= 1022 {
        f64::from_bits((1023 - e) << 52)
    } else if e <= 1074 {
        f64::from_bits(1u64 << (1074 - e))
    } else {
        0.0
    }
}

fn check_class(n: u32, k: u32) -> Result<()> {
    if n > MAX_DIMENSION {
        return Err(Error::DimensionOutOfRange { n, min: 0, max: MAX_DIMENSION });
    }
    if k > n {
        return Err(Error::DegreeClassOutOfRange { n, k });
    }
    Ok(())
}

/// Number of n-variable functions of degree exactly k, as a decimal string.
/// Exact mode stops at n = 10, where the counts already reach 1024 bits.
pub fn count_exact(n: u32, k: u32) -> Result<String> {
    check_class(n, k)?;
    if n > 10 {
        return Err(Error::ExactCountOutOfRange { n });
    }
    let c = binomial(n.into(), k.into())? as usize;
    let lower: u64 = (0..k).map(|i| binomial(n.into(), i.into()).unwrap()).sum();
    let count = ((BigUint::from(1u8) << c) - 1u8) << usize::try_from(lower).unwrap();
    Ok(count.to_string())
}

/// Probability that a uniformly random n-variable function has degree
/// exactly k: `(1 - 2^-C(n,k)) * 2^-(C(n,k+1) + .. + C(n,n))`. Underflows to
/// 0 for classes too rare to represent.
pub fn probability(n: u32, k: u32) -> Result<f64> {
    check_class(n, k)?;
    let c = binomial(n.into(), k.into())?;
    let tail: u64 = (k + 1..=n).map(|i| binomial(n.into(), i.into()).unwrap()).sum();
    Ok((1.0 - exp2_neg(c)) * exp2_neg(tail))
}

/// One degree class of the distribution; `count` is absent past n = 10.
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionRow {
    pub n: u32,
    pub k: u32,
    pub count: Option<String>,
    pub probability: f64,
}

/// All rows k = 0..=n. The zero function is the single member of the bottom
/// class and belongs to no row, so the probabilities sum to `1 - 2^-(2^n)`.
pub fn distribution_table(n: u32) -> Result<Vec<DistributionRow>> {
    if n < 1 || n > MAX_DIMENSION {
        return Err(Error::DimensionOutOfRange { n, min: 1, max: MAX_DIMENSION });
    }
    (0..=n)
        .map(|k| {
            Ok(DistributionRow {
                n,
                k,
                count: if n <= 10 { Some(count_exact(n, k)?) } else { None },
                probability: probability(n, k)?,
            })
        })
        .collect()
}

/// Tally of observed degree classes, bottom included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmpiricalHistogram {
    n: u32,
    counts: Vec<u64>,
    total: u64,
}

impl EmpiricalHistogram {
    pub fn new(n: u32) -> Self {
        Self { n, counts: alloc::vec![0; n as usize + 2], total: 0 }
    }

    fn slot(&self, class: Degree) -> usize {
        match class {
            Degree::Bottom => 0,
            Degree::Value(k) => {
                assert!(k <= self.n, "degree {k} out of range for n = {}", self.n);
                k as usize + 1
            }
        }
    }

    pub fn record(&mut self, class: Degree) {
        let slot = self.slot(class);
        self.counts[slot] += 1;
        self.total += 1;
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn count(&self, class: Degree) -> u64 {
        self.counts[self.slot(class)]
    }

    /// Observed fraction of `class`; 0 when nothing was recorded.
    pub fn fraction(&self, class: Degree) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        self.count(class) as f64 / self.total as f64
    }

    /// All classes bottom-first with their counts.
    pub fn classes(&self) -> impl Iterator<Item = (Degree, u64)> + '_ {
        let bottom = core::iter::once((Degree::Bottom, self.counts[0]));
        bottom.chain(
            self.counts[1..]
                .iter()
                .enumerate()
                .map(|(k, &c)| (Degree::Value(k as u32), c)),
        )
    }
}

/// Degrees of `count` seeded random functions, computed with the bitwise
/// pipeline and the parity shortcut on. Deterministic for a fixed seed.
pub fn empirical_distribution(n: u32, count: u64, seed: u64) -> Result<EmpiricalHistogram> {
    let pipeline = DegreePipeline::new(n)?;
    let options =
        PipelineOptions { algorithm: SearchAlgorithm::BitwiseMask, parity_shortcut: true };
    let mut histogram = EmpiricalHistogram::new(n);
    for tt in RandomFunctions::new(n, count, seed)? {
        histogram.record(pipeline.degree_of(&tt, options)?.degree);
    }
    Ok(histogram)
}
