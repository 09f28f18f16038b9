//! Error type shared by the whole crate.

use core::fmt;

/// Errors raised when constructing or combining the core data types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Cube dimension outside the supported range.
    DimensionOutOfRange { n: u32, min: u32, max: u32 },
    /// Two values built for different cube dimensions were combined.
    DimensionMismatch { expected: u32, found: u32 },
    /// Binomial coefficient arguments outside `0 <= k <= n <= 60`.
    BinomialDomain { n: u64, k: u64 },
    /// Degree class `k` exceeds the dimension `n`.
    DegreeClassOutOfRange { n: u32, k: u32 },
    /// Word buffer length does not match the dimension.
    WordCount { expected: usize, found: usize },
    /// Bit-text input has the wrong length.
    TextLength { expected: usize, found: usize },
    /// Bit-text input contains a character other than `'0'` or `'1'`.
    TextChar { position: usize, found: char },
    /// Byte truth-table entries must be 0 or 1.
    ByteValue { position: usize, found: u8 },
    /// Exact counts overflow any sane storage past n = 10.
    ExactCountOutOfRange { n: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::DimensionOutOfRange { n, min, max } => {
                write!(f, "dimension n = {n} outside supported range {min}..={max}")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected n = {expected}, found n = {found}")
            }
            Error::BinomialDomain { n, k } => {
                write!(f, "binomial({n}, {k}) outside domain 0 <= k <= n <= 60")
            }
            Error::DegreeClassOutOfRange { n, k } => {
                write!(f, "degree class k = {k} exceeds dimension n = {n}")
            }
            Error::WordCount { expected, found } => {
                write!(f, "expected {expected} words, found {found}")
            }
            Error::TextLength { expected, found } => {
                write!(f, "expected {expected} bit characters, found {found}")
            }
            Error::TextChar { position, found } => {
                write!(f, "invalid character {found:?} at position {position}; expected '0' or '1'")
            }
            Error::ByteValue { position, found } => {
                write!(f, "invalid byte value {found} at position {position}; expected 0 or 1")
            }
            Error::ExactCountOutOfRange { n } => {
                write!(f, "exact counts are unavailable for n = {n} > 10; use probability mode")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
