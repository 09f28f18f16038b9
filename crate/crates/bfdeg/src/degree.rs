//! Degree searches over ANF vectors and the end-to-end pipeline.
//!
//! All four searches return the same degree; they differ in what they probe
//! and how often. `degree_es` scans every coefficient. The WLO searches walk
//! the weight-lexicographic order backwards so the first set coefficient
//! already has maximal weight. The masked search tests whole layers at a
//! time with one AND per word. The pipeline glues a transform, an optional
//! parity fast path, and a search together.

use core::fmt;

use crate::anf::{anft_bitwise_in_place, anft_bytewise_in_place, unpack, ByteVector};
use crate::bitpack::{PackedVector, MAX_DIMENSION};
use crate::cube::{MaskSet, WloSequence};
use crate::error::{Error, Result};

/// Algebraic degree, with a dedicated bottom value for the zero function.
/// `Bottom` orders below every numeric degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    Bottom,
    Value(u32),
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Bottom => f.write_str("-inf"),
            Degree::Value(k) => write!(f, "{k}"),
        }
    }
}

/// Which code path produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Es,
    WloByte,
    WloBitMask,
    WloBitProbe,
    ParityShortcut,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Es => "ES",
            Algorithm::WloByte => "WLO_BYTE",
            Algorithm::WloBitMask => "WLO_BIT_MASK",
            Algorithm::WloBitProbe => "WLO_BIT_PROBE",
            Algorithm::ParityShortcut => "PARITY_SHORTCUT",
        })
    }
}

/// A computed degree plus instrumentation: `steps` counts coefficient probes
/// (or masks tried), `word_ops` counts word-level conjunctions on the
/// bitwise paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeResult {
    pub degree: Degree,
    pub steps: u64,
    pub word_ops: u64,
    pub algorithm: Algorithm,
}

/// Exhaustive scan of all `2^n` coefficients; `steps` is always `2^n`.
pub fn degree_es(anf: &ByteVector) -> DegreeResult {
    let mut degree = Degree::Bottom;
    for (i, &a) in anf.values().iter().enumerate() {
        if a == 1 {
            let w = Degree::Value(i.count_ones());
            if w > degree {
                degree = w;
            }
        }
    }
    DegreeResult { degree, steps: anf.len() as u64, word_ops: 0, algorithm: Algorithm::Es }
}

fn check_same_dimension(expected: u32, found: u32) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Probes coefficients from the back of the WLO order and stops at the first
/// set one; its layer is the degree.
pub fn degree_wlo_bytewise(anf: &ByteVector, seq: &WloSequence) -> Result<DegreeResult> {
    check_same_dimension(anf.n(), seq.n())?;
    let mut steps = 0;
    for pos in (0..seq.order().len()).rev() {
        steps += 1;
        if anf.values()[seq.order()[pos]] == 1 {
            return Ok(DegreeResult {
                degree: Degree::Value(seq.layer_of_position(pos)),
                steps,
                word_ops: 0,
                algorithm: Algorithm::WloByte,
            });
        }
    }
    Ok(DegreeResult { degree: Degree::Bottom, steps, word_ops: 0, algorithm: Algorithm::WloByte })
}

/// Conjoins the ANF with the layer masks from weight n downwards; the first
/// nonempty intersection gives the degree. Each mask scan stops at its first
/// nonzero word; `word_ops` totals the conjunctions executed.
pub fn degree_wlo_bitwise(anf: &PackedVector, masks: &MaskSet) -> Result<DegreeResult> {
    check_same_dimension(anf.n(), masks.n())?;
    let mut steps = 0;
    let mut word_ops = 0;
    for k in (0..=masks.n()).rev() {
        steps += 1;
        let mask = &masks.masks()[k as usize];
        for (a, m) in anf.words().iter().zip(mask.words()) {
            word_ops += 1;
            if a & m != 0 {
                return Ok(DegreeResult {
                    degree: Degree::Value(k),
                    steps,
                    word_ops,
                    algorithm: Algorithm::WloBitMask,
                });
            }
        }
    }
    Ok(DegreeResult {
        degree: Degree::Bottom,
        steps,
        word_ops,
        algorithm: Algorithm::WloBitMask,
    })
}

/// Same probe order as [`degree_wlo_bytewise`] but each probe extracts one
/// bit from the packed vector: constant word work per probe.
pub fn degree_wlo_bitprobe(anf: &PackedVector, seq: &WloSequence) -> Result<DegreeResult> {
    check_same_dimension(anf.n(), seq.n())?;
    let words = anf.words();
    let mut steps = 0;
    for pos in (0..seq.order().len()).rev() {
        steps += 1;
        let c = seq.order()[pos];
        if (words[c >> 6] >> (c & 63)) & 1 == 1 {
            return Ok(DegreeResult {
                degree: Degree::Value(seq.layer_of_position(pos)),
                steps,
                word_ops: steps,
                algorithm: Algorithm::WloBitProbe,
            });
        }
    }
    Ok(DegreeResult {
        degree: Degree::Bottom,
        steps,
        word_ops: steps,
        algorithm: Algorithm::WloBitProbe,
    })
}

/// Search selection for the pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchAlgorithm {
    Es,
    WloBytewise,
    BitwiseMask,
    BitProbe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineOptions {
    pub algorithm: SearchAlgorithm,
    pub parity_shortcut: bool,
}

/// Truth table to degree, end to end. Holds the WLO sequence and mask set
/// for its dimension so many functions can be processed against one set of
/// tables.
#[derive(Debug, Clone)]
pub struct DegreePipeline {
    n: u32,
    sequence: WloSequence,
    masks: MaskSet,
}

impl DegreePipeline {
    pub fn new(n: u32) -> Result<Self> {
        if n < 1 || n > MAX_DIMENSION {
            return Err(Error::DimensionOutOfRange { n, min: 1, max: MAX_DIMENSION });
        }
        Ok(Self { n, sequence: WloSequence::generate(n)?, masks: MaskSet::generate(n)? })
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn sequence(&self) -> &WloSequence {
        &self.sequence
    }

    #[inline]
    pub fn masks(&self) -> &MaskSet {
        &self.masks
    }

    /// Degree of the function with truth table `tt`.
    ///
    /// With the shortcut enabled, an odd-weight table returns degree n
    /// immediately: the top ANF coefficient is the parity of the whole
    /// table, so no transform is needed. Otherwise the matching transform
    /// runs (byte-wise for the byte searches, bitwise for the packed ones)
    /// followed by the selected search.
    pub fn degree_of(&self, tt: &PackedVector, options: PipelineOptions) -> Result<DegreeResult> {
        check_same_dimension(self.n, tt.n())?;
        if options.parity_shortcut && tt.parity() {
            return Ok(DegreeResult {
                degree: Degree::Value(self.n),
                steps: 0,
                word_ops: 0,
                algorithm: Algorithm::ParityShortcut,
            });
        }
        match options.algorithm {
            SearchAlgorithm::Es => {
                let mut bytes = unpack(tt);
                anft_bytewise_in_place(&mut bytes);
                Ok(degree_es(&bytes))
            }
            SearchAlgorithm::WloBytewise => {
                let mut bytes = unpack(tt);
                anft_bytewise_in_place(&mut bytes);
                degree_wlo_bytewise(&bytes, &self.sequence)
            }
            SearchAlgorithm::BitwiseMask => {
                let mut anf = tt.clone();
                anft_bitwise_in_place(&mut anf);
                degree_wlo_bitwise(&anf, &self.masks)
            }
            SearchAlgorithm::BitProbe => {
                let mut anf = tt.clone();
                anft_bitwise_in_place(&mut anf);
                degree_wlo_bitprobe(&anf, &self.sequence)
            }
        }
    }

    /// Degree of a function given directly as an ANF vector (no transform).
    pub fn degree_of_anf(&self, anf: &PackedVector, algorithm: SearchAlgorithm) -> Result<DegreeResult> {
        check_same_dimension(self.n, anf.n())?;
        match algorithm {
            SearchAlgorithm::Es => Ok(degree_es(&unpack(anf))),
            SearchAlgorithm::WloBytewise => degree_wlo_bytewise(&unpack(anf), &self.sequence),
            SearchAlgorithm::BitwiseMask => degree_wlo_bitwise(anf, &self.masks),
            SearchAlgorithm::BitProbe => degree_wlo_bitprobe(anf, &self.sequence),
        }
    }
}
