//! Command-line surface for the bfdeg library.
//!
//! Subcommands: `wlo` and `masks` dump the precomputed order tables,
//! `degree` computes degrees for a stream of functions, `dist` prints the
//! degree distribution, `bench` times the pipelines against each other, and
//! `selftest` replays the embedded golden fixtures.
//!
//! Exit codes: 0 on success, 1 for runtime or data errors (I/O, malformed
//! input, internal disagreement), 2 for usage errors.

pub mod bench;
pub mod commands;
pub mod ingest;
pub mod selftest;

use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bfdeg::{PackedVector, RandomFunctions, SearchAlgorithm};

use crate::ingest::FileFunctions;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] bfdeg::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error(
        "{path}: {size} bytes is not a whole number of functions; \
         at n = {n} each function occupies {multiple} bytes, so the file size \
         must be a multiple of {multiple}"
    )]
    FileFormat { path: PathBuf, size: u64, multiple: u64, n: u32 },
    #[error("input line {line}: {source}")]
    Parse { line: usize, source: bfdeg::Error },
    #[error("{0}")]
    Usage(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("failed writing output: {0}")]
    Output(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

fn dimension() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..=30)
}

#[derive(Debug, Parser)]
#[command(
    name = "bfdeg",
    version,
    about = "Algebraic degree of Boolean functions: order tables, degree computation, \
             distributions, and pipeline benchmarks"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WloFormat {
    /// The whole sequence on one comma-separated line
    Csv,
    /// One weight layer per line
    Lines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    /// Byte-wise transform, scan of every coefficient
    Es,
    /// Byte-wise transform, reverse weight-lexicographic probing
    Wlo,
    /// Bitwise transform, layer-mask conjunctions
    Bitwise,
    /// Bitwise transform, single-bit reverse probing
    Probe,
}

impl From<AlgorithmArg> for SearchAlgorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Es => SearchAlgorithm::Es,
            AlgorithmArg::Wlo => SearchAlgorithm::WloBytewise,
            AlgorithmArg::Bitwise => SearchAlgorithm::BitwiseMask,
            AlgorithmArg::Probe => SearchAlgorithm::BitProbe,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DistMode {
    /// Exact counts (n <= 10) next to the probabilities
    Exact,
    /// Probabilities only; works for every n
    Prob,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the weight-lexicographic order of the n-dimensional cube
    Wlo {
        #[arg(long, value_parser = dimension())]
        n: u32,
        #[arg(long, value_enum, default_value_t = WloFormat::Csv)]
        format: WloFormat,
    },
    /// Print the n+1 weight-layer masks: decimal serial numbers for n <= 5,
    /// one hexadecimal row per mask for n >= 6
    Masks {
        #[arg(long, value_parser = dimension())]
        n: u32,
    },
    /// Compute degrees for functions from a file, the seeded generator, or
    /// '0'/'1' lines on stdin
    Degree {
        #[arg(long, value_parser = dimension())]
        n: u32,
        /// Raw little-endian 64-bit word file, one function per word group
        #[arg(long, conflicts_with = "random")]
        input: Option<PathBuf>,
        /// Generate COUNT seeded random functions instead of reading input
        #[arg(long, value_name = "COUNT")]
        random: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = AlgorithmArg::Bitwise)]
        algorithm: AlgorithmArg,
        /// Return degree n immediately for odd-weight truth tables
        #[arg(long)]
        parity_shortcut: bool,
        /// Treat inputs as ANF vectors (skips the transform; the parity
        /// shortcut does not apply)
        #[arg(long)]
        input_is_anf: bool,
        /// Append each function's ANF as a '0'/'1' string
        #[arg(long)]
        emit_anf: bool,
    },
    /// Print the degree distribution for dimension n as CSV
    Dist {
        #[arg(long, value_parser = dimension())]
        n: u32,
        #[arg(long, value_enum, default_value_t = DistMode::Prob)]
        mode: DistMode,
        /// Also sample COUNT seeded random functions and report observed
        /// fractions and deviations
        #[arg(long, value_name = "COUNT")]
        empirical: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time the transform+search pipelines over one function stream
    Bench {
        #[arg(long, value_parser = dimension())]
        n: u32,
        /// Generate COUNT seeded random functions
        #[arg(long, value_name = "COUNT", conflicts_with = "input")]
        random: Option<u64>,
        /// Read functions from a raw word file
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        repetitions: u32,
    },
    /// Run the embedded golden fixtures; exit 0 only if every suite passes
    Selftest,
}

/// Where a degree/bench command takes its functions from.
pub enum Source {
    File(PathBuf),
    Random { count: u64, seed: u64 },
    Stdin,
}

/// Iterator of packed truth tables from any source. Stdin is read eagerly:
/// one function per nonempty line of 2^n '0'/'1' characters.
pub fn packed_stream(
    source: &Source,
    n: u32,
) -> Result<Box<dyn Iterator<Item = Result<PackedVector, CliError>>>, CliError> {
    match source {
        Source::File(path) => Ok(Box::new(FileFunctions::open(path, n)?)),
        Source::Random { count, seed } => {
            Ok(Box::new(RandomFunctions::new(n, *count, *seed)?.map(Ok)))
        }
        Source::Stdin => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|source| CliError::Io { path: PathBuf::from("<stdin>"), source })?;
            let vectors: Vec<Result<PackedVector, CliError>> = text
                .lines()
                .map(str::trim)
                .filter(|line| !line.is_empty())
                .enumerate()
                .map(|(i, line)| {
                    PackedVector::from_text(line, n)
                        .map_err(|source| CliError::Parse { line: i + 1, source })
                })
                .collect();
            Ok(Box::new(vectors.into_iter()))
        }
    }
}

fn dispatch(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    match cli.command {
        Command::Wlo { n, format } => commands::cmd_wlo(n, format, out),
        Command::Masks { n } => commands::cmd_masks(n, out),
        Command::Degree {
            n,
            input,
            random,
            seed,
            algorithm,
            parity_shortcut,
            input_is_anf,
            emit_anf,
        } => {
            let source = match (input, random) {
                (Some(path), None) => Source::File(path),
                (None, Some(count)) => Source::Random { count, seed },
                (None, None) => Source::Stdin,
                (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
            };
            let options = commands::DegreeOptions {
                algorithm: algorithm.into(),
                parity_shortcut,
                input_is_anf,
                emit_anf,
            };
            commands::cmd_degree(n, &source, options, out)
        }
        Command::Dist { n, mode, empirical, seed } => {
            commands::cmd_dist(n, mode, empirical, seed, out)
        }
        Command::Bench { n, random, input, seed, repetitions } => {
            let source = match (input, random) {
                (Some(path), None) => Source::File(path),
                (None, Some(count)) => Source::Random { count, seed },
                (None, None) => {
                    return Err(CliError::Usage(
                        "bench needs a function source: --random COUNT or --input PATH".into(),
                    ))
                }
                (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
            };
            bench::cmd_bench(n, &source, repetitions, out)
        }
        Command::Selftest => selftest::cmd_selftest(out),
    }
}

/// Parses arguments from the environment and runs the selected command.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = dispatch(cli, &mut out).and_then(|()| out.flush().map_err(CliError::Output));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
