//! The wlo, masks, degree, and dist subcommands.

use std::io::Write;

use bfdeg::{
    anft_bitwise, distribution_table, empirical_distribution, Coordinate, Degree, DegreePipeline,
    EmpiricalHistogram, MaskSet, PipelineOptions, SearchAlgorithm, WloSequence,
};

use crate::{CliError, DistMode, Source, WloFormat};

fn write_joined(out: &mut impl Write, items: &[Coordinate]) -> std::io::Result<()> {
    for (i, v) in items.iter().enumerate() {
        if i > 0 {
            write!(out, ", ")?;
        }
        write!(out, "{v}")?;
    }
    writeln!(out)
}

pub fn cmd_wlo(n: u32, format: WloFormat, out: &mut impl Write) -> Result<(), CliError> {
    let seq = WloSequence::generate(n)?;
    match format {
        WloFormat::Csv => write_joined(out, seq.order())?,
        WloFormat::Lines => {
            for k in 0..=n {
                write_joined(out, seq.layer(k)?)?;
            }
        }
    }
    Ok(())
}

pub fn cmd_masks(n: u32, out: &mut impl Write) -> Result<(), CliError> {
    let set = MaskSet::generate(n)?;
    // Keep the recurrence honest against the direct construction while the
    // direct sweep is still cheap.
    if n <= 12 && set != MaskSet::by_weight_classes(n)? {
        return Err(CliError::Consistency(
            "mask recurrence disagrees with the weight-classification construction".into(),
        ));
    }
    if n <= 5 {
        let serials = set.serial_numbers();
        writeln!(out, "{}", serials.join(", "))?;
    } else {
        for mask in set.masks() {
            writeln!(out, "{}", mask.to_hex())?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy)]
pub struct DegreeOptions {
    pub algorithm: SearchAlgorithm,
    pub parity_shortcut: bool,
    pub input_is_anf: bool,
    pub emit_anf: bool,
}

/// One line per function: index, degree, steps, algorithm tag, and with
/// `--emit-anf` the ANF bits. A '#'-prefixed histogram follows.
pub fn cmd_degree(
    n: u32,
    source: &Source,
    options: DegreeOptions,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let pipeline = DegreePipeline::new(n)?;
    let pipeline_options = PipelineOptions {
        algorithm: options.algorithm,
        parity_shortcut: options.parity_shortcut,
    };
    let mut histogram = EmpiricalHistogram::new(n);
    for (index, item) in crate::packed_stream(source, n)?.enumerate() {
        let v = item?;
        let result = if options.input_is_anf {
            pipeline.degree_of_anf(&v, options.algorithm)?
        } else {
            pipeline.degree_of(&v, pipeline_options)?
        };
        histogram.record(result.degree);
        write!(out, "{index}\t{}\t{}\t{}", result.degree, result.steps, result.algorithm)?;
        if options.emit_anf {
            let anf = if options.input_is_anf { v } else { anft_bitwise(&v) };
            write!(out, "\t{}", anf.render_text())?;
        }
        writeln!(out)?;
    }
    writeln!(out, "# total {}", histogram.total())?;
    for (class, count) in histogram.classes() {
        writeln!(out, "# {class} {count}")?;
    }
    Ok(())
}

/// CSV rows `n,k,count,probability`; with `--empirical` two more columns
/// (observed fraction, absolute deviation) and a trailing row for the
/// bottom class.
pub fn cmd_dist(
    n: u32,
    mode: DistMode,
    empirical: Option<u64>,
    seed: u64,
    out: &mut impl Write,
) -> Result<(), CliError> {
    if mode == DistMode::Exact && n > 10 {
        return Err(CliError::Usage(format!(
            "exact counts are unavailable for n = {n} > 10; use --mode prob"
        )));
    }
    let rows = distribution_table(n)?;
    let histogram = match empirical {
        Some(count) => Some(empirical_distribution(n, count, seed)?),
        None => None,
    };

    write!(out, "n,k,count,probability")?;
    if histogram.is_some() {
        write!(out, ",empirical,deviation")?;
    }
    writeln!(out)?;

    for row in &rows {
        let count = match (mode, &row.count) {
            (DistMode::Exact, Some(c)) => c.as_str(),
            _ => "NA",
        };
        write!(out, "{},{},{},{}", row.n, row.k, count, row.probability)?;
        if let Some(h) = &histogram {
            let observed = h.fraction(Degree::Value(row.k));
            write!(out, ",{},{}", observed, (observed - row.probability).abs())?;
        }
        writeln!(out)?;
    }

    if let Some(h) = &histogram {
        // The zero function forms its own class below every degree.
        let p_bottom = 0.5f64.powi(1 << n);
        let count = if mode == DistMode::Exact { "1" } else { "NA" };
        let observed = h.fraction(Degree::Bottom);
        writeln!(
            out,
            "{n},-inf,{count},{p_bottom},{observed},{}",
            (observed - p_bottom).abs()
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render<F: FnOnce(&mut Vec<u8>) -> Result<(), CliError>>(f: F) -> String {
        let mut buf = Vec::new();
        f(&mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn wlo_formats() {
        let csv = render(|out| cmd_wlo(3, WloFormat::Csv, out));
        assert_eq!(csv, "0, 1, 2, 4, 3, 5, 6, 7\n");
        let lines = render(|out| cmd_wlo(3, WloFormat::Lines, out));
        assert_eq!(lines, "0\n1, 2, 4\n3, 5, 6\n7\n");
    }

    #[test]
    fn mask_dumps() {
        assert_eq!(render(|out| cmd_masks(3, out)), "128, 104, 22, 1\n");
        let hex = render(|out| cmd_masks(6, out));
        let rows: Vec<&str> = hex.lines().collect();
        assert_eq!(rows.len(), 7);
        assert_eq!(rows[0], "8000000000000000");
        assert_eq!(rows[6], "0000000000000001");
    }

    #[test]
    fn dist_exact_table() {
        let csv = render(|out| cmd_dist(3, DistMode::Exact, None, 0, out));
        let expected = "n,k,count,probability\n\
                        3,0,1,0.00390625\n\
                        3,1,14,0.0546875\n\
                        3,2,112,0.4375\n\
                        3,3,128,0.5\n";
        assert_eq!(csv, expected);
    }

    #[test]
    fn dist_prob_hides_counts() {
        let csv = render(|out| cmd_dist(12, DistMode::Prob, None, 0, out));
        assert!(csv.lines().nth(1).unwrap().starts_with("12,0,NA,"));
        assert_eq!(csv.lines().count(), 14);
    }

    #[test]
    fn dist_exact_rejects_large_n() {
        let mut buf = Vec::new();
        let err = cmd_dist(11, DistMode::Exact, None, 0, &mut buf).unwrap_err();
        assert!(matches!(err, CliError::Usage(_)));
    }

    #[test]
    fn dist_empirical_appends_bottom_row() {
        let csv = render(|out| cmd_dist(4, DistMode::Exact, Some(200), 7, out));
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,k,count,probability,empirical,deviation");
        assert_eq!(lines.len(), 7);
        assert!(lines[6].starts_with("4,-inf,1,"));
    }

    #[test]
    fn degree_from_generator_counts_functions() {
        let options = DegreeOptions {
            algorithm: SearchAlgorithm::BitwiseMask,
            parity_shortcut: false,
            input_is_anf: false,
            emit_anf: false,
        };
        let text = render(|out| {
            cmd_degree(6, &Source::Random { count: 5, seed: 11 }, options, out)
        });
        let function_lines: Vec<&str> =
            text.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(function_lines.len(), 5);
        assert!(function_lines[0].starts_with("0\t"));
        assert!(text.contains("# total 5"));
    }
}
