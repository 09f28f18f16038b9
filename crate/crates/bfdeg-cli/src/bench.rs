//! The bench subcommand: byte-wise ANFT+ES, byte-wise ANFT+WLO, bitwise
//! ANFT+masks, and bitwise ANFT+probe over the same function stream.
//!
//! Functions are processed in chunks; unpacking to bytes and working copies
//! are prepared outside the clocks so only transform plus search is timed.
//! Every algorithm must produce the identical degree sequence, and every
//! repetition the identical histogram and step totals, before any timing is
//! reported.

use std::io::Write;
use std::time::{Duration, Instant};

use bfdeg::{
    anft_bitwise_in_place, anft_bytewise_in_place, degree_es, degree_wlo_bitprobe,
    degree_wlo_bitwise, degree_wlo_bytewise, unpack, ByteVector, Degree, DegreeResult,
    EmpiricalHistogram, MaskSet, PackedVector, WloSequence,
};

use crate::{CliError, Source};

const CHUNK: usize = 4096;
const LABELS: [&str; 4] = ["es", "wlo", "bitwise", "probe"];

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
struct Tally {
    steps: u64,
    word_ops: u64,
}

impl Tally {
    fn add(&mut self, r: &DegreeResult) {
        self.steps += r.steps;
        self.word_ops += r.word_ops;
    }
}

struct Repetition {
    times: [Duration; 4],
    tallies: [Tally; 4],
    histogram: EmpiricalHistogram,
    functions: u64,
}

fn run_repetition(
    n: u32,
    source: &Source,
    seq: &WloSequence,
    masks: &MaskSet,
) -> Result<Repetition, CliError> {
    let mut stream = crate::packed_stream(source, n)?;
    let mut times = [Duration::ZERO; 4];
    let mut tallies = [Tally::default(); 4];
    let mut histogram = EmpiricalHistogram::new(n);
    let mut functions = 0u64;
    let mut degrees: [Vec<Degree>; 4] = Default::default();

    loop {
        let packed: Vec<PackedVector> =
            stream.by_ref().take(CHUNK).collect::<Result<_, _>>()?;
        if packed.is_empty() {
            break;
        }
        functions += packed.len() as u64;
        let bytes: Vec<ByteVector> = packed.iter().map(unpack).collect();
        for d in &mut degrees {
            d.clear();
            d.reserve(packed.len());
        }

        let mut work = bytes.clone();
        let clock = Instant::now();
        for b in &mut work {
            anft_bytewise_in_place(b);
            let r = degree_es(b);
            degrees[0].push(r.degree);
            tallies[0].add(&r);
        }
        times[0] += clock.elapsed();

        let mut work = bytes;
        let clock = Instant::now();
        for b in &mut work {
            anft_bytewise_in_place(b);
            let r = degree_wlo_bytewise(b, seq)?;
            degrees[1].push(r.degree);
            tallies[1].add(&r);
        }
        times[1] += clock.elapsed();

        let mut work = packed.clone();
        let clock = Instant::now();
        for v in &mut work {
            anft_bitwise_in_place(v);
            let r = degree_wlo_bitwise(v, masks)?;
            degrees[2].push(r.degree);
            tallies[2].add(&r);
        }
        times[2] += clock.elapsed();

        let mut work = packed;
        let clock = Instant::now();
        for v in &mut work {
            anft_bitwise_in_place(v);
            let r = degree_wlo_bitprobe(v, seq)?;
            degrees[3].push(r.degree);
            tallies[3].add(&r);
        }
        times[3] += clock.elapsed();

        for (i, other) in degrees.iter().enumerate().skip(1) {
            if *other != degrees[0] {
                let index = degrees[0]
                    .iter()
                    .zip(other)
                    .position(|(a, b)| a != b)
                    .unwrap_or(0) as u64
                    + functions
                    - other.len() as u64;
                return Err(CliError::Consistency(format!(
                    "algorithms {} and {} disagree on function {index}",
                    LABELS[0], LABELS[i]
                )));
            }
        }
        for &d in &degrees[0] {
            histogram.record(d);
        }
    }
    Ok(Repetition { times, tallies, histogram, functions })
}

pub fn cmd_bench(
    n: u32,
    source: &Source,
    repetitions: u32,
    out: &mut impl Write,
) -> Result<(), CliError> {
    if repetitions == 0 {
        return Err(CliError::Usage("repetitions must be at least 1".into()));
    }
    if matches!(source, Source::Stdin) {
        return Err(CliError::Usage(
            "bench needs a function source: --random COUNT or --input PATH".into(),
        ));
    }
    let seq = WloSequence::generate(n)?;
    let masks = MaskSet::generate(n)?;

    let first = run_repetition(n, source, &seq, &masks)?;
    if first.functions == 0 {
        return Err(CliError::Usage("the function source is empty".into()));
    }
    let mut times: Vec<[Duration; 4]> = vec![first.times];
    for rep in 1..repetitions {
        let next = run_repetition(n, source, &seq, &masks)?;
        if next.histogram != first.histogram || next.tallies != first.tallies {
            return Err(CliError::Consistency(format!(
                "repetition {rep} produced different degrees than repetition 0"
            )));
        }
        times.push(next.times);
    }

    writeln!(out, "n={n} functions={} repetitions={repetitions}", first.functions)?;
    writeln!(out, "algorithm,mean_seconds,functions_per_second,steps,word_ops,rep_seconds")?;
    for (i, label) in LABELS.iter().enumerate() {
        let total: Duration = times.iter().map(|t| t[i]).sum();
        let mean = total.as_secs_f64() / f64::from(repetitions);
        let fps = first.functions as f64 / mean;
        let reps = times
            .iter()
            .map(|t| format!("{:.6}", t[i].as_secs_f64()))
            .collect::<Vec<_>>()
            .join(";");
        writeln!(
            out,
            "{label},{mean:.6},{fps:.0},{},{},{reps}",
            first.tallies[i].steps, first.tallies[i].word_ops
        )?;
    }
    writeln!(out, "# histogram total={}", first.histogram.total())?;
    for (class, count) in first.histogram.classes() {
        writeln!(out, "# {class} {count}")?;
    }
    Ok(())
}
