//! Finite binary words, their run-length encodings, and exhaustive enumeration.
//!
//! Symbols are stored as `u8` values `0` and `1`. Every constructor validates
//! that invariant, so the rest of the crate can index symbols freely.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite word over the alphabet `{0, 1}`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    symbols: Vec<u8>,
}

impl BinaryWord {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Parses an ASCII string of `'0'`/`'1'` characters.
    pub fn from_text(text: &str) -> Result<Self> {
        let symbols = text
            .bytes()
            .enumerate()
            .map(|(position, b)| match b {
                b'0' => Ok(0),
                b'1' => Ok(1),
                _ => Err(Error::InvalidSymbol { position }),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Self { symbols })
    }

    /// Builds a word from raw symbol values, each of which must be 0 or 1.
    pub fn from_symbols(symbols: &[u8]) -> Result<Self> {
        if let Some(position) = symbols.iter().position(|&s| s > 1) {
            return Err(Error::InvalidSymbol { position });
        }
        Ok(Self {
            symbols: symbols.to_vec(),
        })
    }

    /// Decodes a run-length encoding. Runs alternate starting at `first_symbol`.
    pub fn from_runs(rle: &RunLengthEncoding) -> Result<Self> {
        if rle.first_symbol > 1 {
            return Err(Error::InvalidSymbol { position: 0 });
        }
        if let Some(index) = rle.run_lengths.iter().position(|&len| len == 0) {
            return Err(Error::ZeroRun { index });
        }
        let mut symbols = Vec::with_capacity(rle.run_lengths.iter().sum());
        let mut symbol = rle.first_symbol;
        for &len in &rle.run_lengths {
            symbols.extend(std::iter::repeat_n(symbol, len));
            symbol ^= 1;
        }
        Ok(Self { symbols })
    }

    /// Concatenation of `(symbol, count)` blocks; zero counts are skipped.
    pub(crate) fn from_blocks(blocks: &[(u8, usize)]) -> Self {
        let mut symbols = Vec::with_capacity(blocks.iter().map(|b| b.1).sum());
        for &(symbol, count) in blocks {
            debug_assert!(symbol <= 1);
            symbols.extend(std::iter::repeat_n(symbol, count));
        }
        Self { symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn first(&self) -> Option<u8> {
        self.symbols.first().copied()
    }

    pub fn complement(&self) -> Self {
        Self {
            symbols: self.symbols.iter().map(|s| s ^ 1).collect(),
        }
    }

    pub fn reverse(&self) -> Self {
        Self {
            symbols: self.symbols.iter().rev().copied().collect(),
        }
    }

    /// The contiguous block `self[start .. start + len)`.
    pub fn factor(&self, start: usize, len: usize) -> Result<Self> {
        match start.checked_add(len) {
            Some(end) if end <= self.len() => Ok(Self {
                symbols: self.symbols[start..end].to_vec(),
            }),
            _ => Err(Error::OutOfRange {
                start,
                len,
                word_len: self.len(),
            }),
        }
    }

    /// Maximal-block decomposition. Fails on the empty word.
    pub fn runs(&self) -> Result<RunLengthEncoding> {
        let first_symbol = self.first().ok_or(Error::EmptyWord)?;
        Ok(RunLengthEncoding {
            first_symbol,
            run_lengths: run_lengths(&self.symbols),
        })
    }

    pub fn push(&mut self, symbol: u8) {
        assert!(symbol <= 1, "binary symbol expected, got {symbol}");
        self.symbols.push(symbol);
    }

    pub fn pop(&mut self) -> Option<u8> {
        self.symbols.pop()
    }
}

pub(crate) fn run_lengths(symbols: &[u8]) -> Vec<usize> {
    symbols.chunk_by(|a, b| a == b).map(<[u8]>::len).collect()
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_text(s)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = self
            .symbols
            .iter()
            .map(|&s| if s == 0 { '0' } else { '1' })
            .collect();
        f.write_str(&text)
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord(\"{self}\")")
    }
}

/// Run-length view of a nonempty word: the first symbol plus the length of
/// each maximal block. Adjacent runs alternate symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RunLengthEncoding {
    pub first_symbol: u8,
    pub run_lengths: Vec<usize>,
}

impl RunLengthEncoding {
    pub fn new(first_symbol: u8, run_lengths: impl Into<Vec<usize>>) -> Self {
        Self {
            first_symbol,
            run_lengths: run_lengths.into(),
        }
    }

    pub fn run_count(&self) -> usize {
        self.run_lengths.len()
    }

    pub fn word_len(&self) -> usize {
        self.run_lengths.iter().sum()
    }
}

/// True iff `|x| = |y|` and `y` is a cyclic rotation of `x` (equal words included).
pub fn are_conjugate(x: &BinaryWord, y: &BinaryWord) -> bool {
    conjugate_slices(x.symbols(), y.symbols())
}

/// `y` occurs as a factor of `x·x`.
pub(crate) fn conjugate_slices(x: &[u8], y: &[u8]) -> bool {
    let n = x.len();
    if n != y.len() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let doubled: Vec<u8> = x.iter().chain(x).copied().collect();
    doubled[..2 * n - 1].windows(n).any(|w| w == y)
}

/// All `2^n` words of length `n` in lexicographic order (`0 < 1`).
pub fn enumerate_words(n: usize) -> Words {
    Words {
        next: Some(vec![0; n]),
    }
}

/// Odometer over words of a fixed length, see [`enumerate_words`].
#[derive(Clone, Debug)]
pub struct Words {
    next: Option<Vec<u8>>,
}

impl Iterator for Words {
    type Item = BinaryWord;

    fn next(&mut self) -> Option<BinaryWord> {
        let current = self.next.take()?;
        let mut successor = current.clone();
        // binary increment from the right; wrapping past 11..1 ends the stream
        let mut carry = true;
        for s in successor.iter_mut().rev() {
            if *s == 0 {
                *s = 1;
                carry = false;
                break;
            }
            *s = 0;
        }
        if !carry {
            self.next = Some(successor);
        }
        Some(BinaryWord { symbols: current })
    }
}
