//! The selftest subcommand: replays the embedded golden fixtures and the
//! exhaustive n = 4 sweep as a runtime tripwire against build or data
//! corruption. One PASS/FAIL line per suite; exit is nonzero if any fails.

use std::io::Write;

use bfdeg::{
    anft_bitwise, anft_bytewise, anft_bytewise_in_place, count_exact, degree_es,
    degree_wlo_bitprobe, degree_wlo_bitwise, degree_wlo_bytewise, pack, probability, unpack,
    ByteVector, Degree, EmpiricalHistogram, MaskSet, PackedVector, SplitMix64, WloSequence,
};

use crate::CliError;

type Suite = fn() -> Result<(), String>;

fn suite_wlo_orders() -> Result<(), String> {
    let expected: [&[usize]; 4] = [
        &[0, 1],
        &[0, 1, 2, 3],
        &[0, 1, 2, 4, 3, 5, 6, 7],
        &[0, 1, 2, 4, 8, 3, 5, 6, 9, 10, 12, 7, 11, 13, 14, 15],
    ];
    for (n, want) in (1u32..=4).zip(expected) {
        let got = WloSequence::generate(n).map_err(|e| e.to_string())?;
        if got.order() != want {
            return Err(format!("order fixture n={n}: got {:?}", got.order()));
        }
    }
    let l5 = WloSequence::generate(5).map_err(|e| e.to_string())?;
    let prefix =
        [0, 1, 2, 4, 8, 16, 3, 5, 6, 9, 10, 12, 17, 18, 20, 24, 7, 11, 13, 14, 19, 21, 22, 25];
    if l5.order()[..24] != prefix {
        return Err("order fixture n=5 prefix".into());
    }
    Ok(())
}

fn suite_mask_serials() -> Result<(), String> {
    let expected: [&[&str]; 5] = [
        &["2", "1"],
        &["8", "6", "1"],
        &["128", "104", "22", "1"],
        &["32768", "26752", "5736", "278", "1"],
        &["2147483648", "1753251840", "375941248", "18224744", "65814", "1"],
    ];
    for (n, want) in (1u32..=5).zip(expected) {
        let recurrence = MaskSet::generate(n).map_err(|e| e.to_string())?;
        if recurrence.serial_numbers() != *want {
            return Err(format!("mask serial fixture n={n}"));
        }
        let direct = MaskSet::by_weight_classes(n).map_err(|e| e.to_string())?;
        if recurrence != direct {
            return Err(format!("mask construction mismatch n={n}"));
        }
    }
    Ok(())
}

fn suite_distribution_grid() -> Result<(), String> {
    let printed: [[f64; 4]; 8] = [
        [0.00390625, 0.0546875, 0.4375, 0.5],
        [0.0004577637, 0.0307617187, 0.46875, 0.5],
        [0.0000152439, 0.0156097412, 0.484375, 0.5],
        [0.0000002384, 0.0078122616, 0.4921875, 0.5],
        [0.0000000019, 0.0039062481, 0.49609375, 0.5],
        [0.0, 0.0019531250, 0.498046875, 0.5],
        [0.0, 0.0009765625, 0.4990234375, 0.5],
        [0.0, 0.0004882812, 0.4995117187, 0.5],
    ];
    for (row, n) in (3u32..=10).enumerate() {
        for (col, k) in (n - 3..=n).enumerate() {
            let p = probability(n, k).map_err(|e| e.to_string())?;
            if (p - printed[row][col]).abs() >= 1e-10 {
                return Err(format!("probability fixture p({n},{k})"));
            }
        }
    }
    let counts: Vec<String> =
        (0..=3).map(|k| count_exact(3, k).unwrap()).collect();
    if counts != ["1", "14", "112", "128"] {
        return Err("exact count fixture n=3".into());
    }
    Ok(())
}

fn suite_worked_example() -> Result<(), String> {
    let anf = PackedVector::from_text("1001011010101000", 4).map_err(|e| e.to_string())?;
    if anf.weight() != 7 || !anf.parity() || !anf.bit(12) || anf.bit(15) {
        return Err("example vector fixture".into());
    }
    let seq = WloSequence::generate(4).unwrap();
    let masks = MaskSet::generate(4).unwrap();
    let byte = degree_wlo_bytewise(&unpack(&anf), &seq).map_err(|e| e.to_string())?;
    if (byte.degree, byte.steps) != (Degree::Value(2), 6) {
        return Err(format!("byte-wise example: degree {} in {} checks", byte.degree, byte.steps));
    }
    let mask = degree_wlo_bitwise(&anf, &masks).map_err(|e| e.to_string())?;
    if (mask.degree, mask.steps) != (Degree::Value(2), 3) {
        return Err(format!("masked example: degree {} in {} steps", mask.degree, mask.steps));
    }
    let probe = degree_wlo_bitprobe(&anf, &seq).map_err(|e| e.to_string())?;
    if (probe.degree, probe.steps) != (Degree::Value(2), 6) {
        return Err("bit-probe example".into());
    }
    Ok(())
}

fn suite_anft_fixtures() -> Result<(), String> {
    let ones = ByteVector::from_values(3, vec![1; 8]).unwrap();
    if anft_bytewise(&ones).values() != [1, 0, 0, 0, 0, 0, 0, 0] {
        return Err("constant one ANF".into());
    }
    let zeros = ByteVector::zeros(3).unwrap();
    if anft_bytewise(&zeros) != zeros {
        return Err("constant zero ANF".into());
    }
    let mut top = PackedVector::zeros(6).unwrap();
    top.set_bit(0, true);
    if anft_bitwise(&PackedVector::ones(6).unwrap()) != top {
        return Err("packed constant one ANF".into());
    }
    // Seeded vectors: the two transform variants must agree and invert.
    let mut rng = SplitMix64::new(0xF1F7);
    for i in 0..100 {
        let words: Vec<u64> = (0..4).map(|_| rng.next_word()).collect();
        let v = PackedVector::from_words(8, words).unwrap();
        let anf = anft_bitwise(&v);
        if anf != pack(&anft_bytewise(&unpack(&v))) {
            return Err(format!("transform variant mismatch on seeded vector {i}"));
        }
        if anft_bitwise(&anf) != v {
            return Err(format!("involution failure on seeded vector {i}"));
        }
    }
    Ok(())
}

fn suite_exhaustive_n4() -> Result<(), String> {
    let seq = WloSequence::generate(4).unwrap();
    let masks = MaskSet::generate(4).unwrap();
    let mut histogram = EmpiricalHistogram::new(4);
    for bits in 0u64..1 << 16 {
        let values = (0..16).map(|i| ((bits >> i) & 1) as u8).collect();
        let tt = ByteVector::from_values(4, values).unwrap();
        let mut anf = tt.clone();
        anft_bytewise_in_place(&mut anf);
        let packed = pack(&anf);

        let degree = degree_es(&anf).degree;
        let byte = degree_wlo_bytewise(&anf, &seq).unwrap().degree;
        let mask = degree_wlo_bitwise(&packed, &masks).unwrap().degree;
        let probe = degree_wlo_bitprobe(&packed, &seq).unwrap().degree;
        if byte != degree || mask != degree || probe != degree {
            return Err(format!("algorithm disagreement on truth table {bits:#06x}"));
        }
        if bits.count_ones() & 1 == 1 && degree != Degree::Value(4) {
            return Err(format!("odd-weight table {bits:#06x} has degree {degree}"));
        }
        histogram.record(degree);
    }
    if histogram.count(Degree::Bottom) != 1 {
        return Err("bottom class must hold exactly the zero function".into());
    }
    for k in 0..=4 {
        if histogram.count(Degree::Value(k)).to_string() != count_exact(4, k).unwrap() {
            return Err(format!("census mismatch for degree {k}"));
        }
    }
    Ok(())
}

pub fn cmd_selftest(out: &mut impl Write) -> Result<(), CliError> {
    let suites: [(&str, Suite); 6] = [
        ("wlo_orders", suite_wlo_orders),
        ("mask_serials", suite_mask_serials),
        ("distribution_grid", suite_distribution_grid),
        ("worked_example", suite_worked_example),
        ("anft_fixtures", suite_anft_fixtures),
        ("exhaustive_n4", suite_exhaustive_n4),
    ];
    let mut first_failure = None;
    for (name, suite) in suites {
        match suite() {
            Ok(()) => writeln!(out, "{name}: PASS")?,
            Err(message) => {
                writeln!(out, "{name}: FAIL ({message})")?;
                first_failure.get_or_insert(name);
            }
        }
    }
    match first_failure {
        None => Ok(()),
        Some(name) => Err(CliError::Consistency(format!("selftest suite '{name}' failed"))),
    }
}
