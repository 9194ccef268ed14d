//! Mesosome detection straight from the definition.
//!
//! A mesosome is an even-length word `x·x'` where `x'` is a rotation of `x`
//! and `x' != x`. Everything here is a plain scan over factors with a
//! conjugacy test each; it is the reference the run-length classifier is
//! checked against, so it stays unoptimized.

use serde::Serialize;

use crate::word::{conjugate_slices, BinaryWord};

/// A mesosome factor `w[start .. start + 2 * half_length)` of some host word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MesosomeOccurrence {
    pub start: usize,
    pub half_length: usize,
}

impl MesosomeOccurrence {
    pub fn end(&self) -> usize {
        self.start + 2 * self.half_length
    }

    /// The two halves `(x, x')` inside `host`. Panics if out of range.
    pub fn halves<'a>(&self, host: &'a BinaryWord) -> (&'a [u8], &'a [u8]) {
        let factor = &host.symbols()[self.start..self.end()];
        factor.split_at(self.half_length)
    }

    /// Re-checks the occurrence invariants against `host`.
    pub fn is_valid_in(&self, host: &BinaryWord) -> bool {
        self.half_length > 0 && self.end() <= host.len() && {
            let (x, y) = self.halves(host);
            x != y && conjugate_slices(x, y)
        }
    }
}

fn is_mesosome_slice(symbols: &[u8]) -> bool {
    let n = symbols.len();
    if n == 0 || !n.is_multiple_of(2) {
        return false;
    }
    let (x, y) = symbols.split_at(n / 2);
    x != y && conjugate_slices(x, y)
}

/// True iff `w` itself is a mesosome.
pub fn is_mesosome(w: &BinaryWord) -> bool {
    is_mesosome_slice(w.symbols())
}

fn occurrences(w: &BinaryWord) -> impl Iterator<Item = MesosomeOccurrence> + '_ {
    let symbols = w.symbols();
    let n = symbols.len();
    (0..n).flat_map(move |start| {
        (1..=(n - start) / 2)
            .map(move |half_length| MesosomeOccurrence { start, half_length })
            .filter(move |occ| is_mesosome_slice(&symbols[occ.start..occ.end()]))
    })
}

/// True iff some factor of `w` is a mesosome.
pub fn contains_mesosome(w: &BinaryWord) -> bool {
    first_mesosome(w).is_some()
}

/// The least occurrence in `(start, half_length)` order.
pub fn first_mesosome(w: &BinaryWord) -> Option<MesosomeOccurrence> {
    occurrences(w).next()
}

/// Every mesosome occurrence in `w`, sorted by `(start, half_length)`.
pub fn find_mesosomes(w: &BinaryWord) -> Vec<MesosomeOccurrence> {
    occurrences(w).collect()
}
