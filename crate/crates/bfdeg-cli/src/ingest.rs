//! Truth-table acquisition from raw word files.
//!
//! A function file is nothing but consecutive little-endian 64-bit words,
//! no header: each group of `max(1, 2^(n-6))` words is one truth table. The
//! reader streams, so files far larger than memory work.

use std::fs::File;
use std::io::{BufReader, Read};
use std::path::{Path, PathBuf};

use bfdeg::{word_count, PackedVector};

use crate::CliError;

/// Streaming reader over the truth tables in a raw word file.
#[derive(Debug)]
pub struct FileFunctions {
    reader: BufReader<File>,
    path: PathBuf,
    n: u32,
    words_per_function: usize,
    total: u64,
    remaining: u64,
}

impl FileFunctions {
    /// Opens `path` for dimension `n`. The file size must be a whole number
    /// of functions, i.e. a multiple of `8 * words_per_function` bytes.
    pub fn open(path: &Path, n: u32) -> Result<Self, CliError> {
        let io_err = |source| CliError::Io { path: path.to_path_buf(), source };
        let file = File::open(path).map_err(io_err)?;
        let size = file.metadata().map_err(io_err)?.len();
        let words_per_function = word_count(n);
        let multiple = 8 * words_per_function as u64;
        if size % multiple != 0 {
            return Err(CliError::FileFormat { path: path.to_path_buf(), size, multiple, n });
        }
        Ok(Self {
            reader: BufReader::new(file),
            path: path.to_path_buf(),
            n,
            words_per_function,
            total: size / multiple,
            remaining: size / multiple,
        })
    }

    /// Number of functions the file holds.
    pub fn function_count(&self) -> u64 {
        self.total
    }
}

impl Iterator for FileFunctions {
    type Item = Result<PackedVector, CliError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let mut words = vec![0u64; self.words_per_function];
        let mut buf = [0u8; 8];
        for w in words.iter_mut() {
            if let Err(source) = self.reader.read_exact(&mut buf) {
                self.remaining = 0;
                return Some(Err(CliError::Io { path: self.path.clone(), source }));
            }
            *w = u64::from_le_bytes(buf);
        }
        // from_words masks the unused high bits when n < 6.
        Some(PackedVector::from_words(self.n, words).map_err(CliError::from))
    }
}
