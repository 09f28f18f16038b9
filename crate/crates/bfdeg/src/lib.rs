//! Algebraic degree of Boolean functions from packed truth tables.
//!
//! A Boolean function of n variables is handled as its `2^n`-bit truth
//! table packed into 64-bit words ([`PackedVector`]). The crate converts
//! truth tables to algebraic normal form with a byte-wise or a word-level
//! bitwise butterfly ([`anf`]), finds the degree by exhaustive scan or by
//! searching the weight-lexicographic order backwards ([`degree`], [`cube`]),
//! and evaluates the exact degree distribution over all functions
//! ([`distribution`]). A pinned splitmix64 generator ([`random`]) makes
//! sampling experiments reproducible.
//!
//! The usual entry point is [`DegreePipeline`], which owns the precomputed
//! order and masks for one dimension:
//!
//! ```
//! use bfdeg::{Degree, DegreePipeline, PackedVector, PipelineOptions, SearchAlgorithm};
//!
//! # fn main() -> bfdeg::Result<()> {
//! let pipeline = DegreePipeline::new(4)?;
//! let tt = PackedVector::from_text("0111111111111111", 4)?;
//! let options = PipelineOptions {
//!     algorithm: SearchAlgorithm::BitwiseMask,
//!     parity_shortcut: true,
//! };
//! let result = pipeline.degree_of(&tt, options)?;
//! assert_eq!(result.degree, Degree::Value(4));
//! # Ok(())
//! # }
//! ```
//!
//! The crate is `no_std` (with `alloc`) unless the default `std` feature is
//! enabled.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod anf;
pub mod bitpack;
pub mod cube;
pub mod degree;
pub mod distribution;
pub mod error;
pub mod random;

pub use anf::{
    anft_bitwise, anft_bitwise_in_place, anft_bytewise, anft_bytewise_in_place,
    mobius_coefficient_oracle, pack, unpack, ByteVector,
};
pub use bitpack::{coordinate_weight, word_count, Coordinate, PackedVector, MAX_DIMENSION};
pub use cube::{binomial, MaskSet, WloSequence};
pub use degree::{
    degree_es, degree_wlo_bitprobe, degree_wlo_bitwise, degree_wlo_bytewise, Algorithm, Degree,
    DegreePipeline, DegreeResult, PipelineOptions, SearchAlgorithm,
};
pub use distribution::{
    count_exact, distribution_table, empirical_distribution, probability, DistributionRow,
    EmpiricalHistogram,
};
pub use error::{Error, Result};
pub use random::{RandomFunctions, SplitMix64};
