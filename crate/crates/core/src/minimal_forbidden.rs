//! Minimal forbidden words: mesosomes none of whose proper factors is a
//! mesosome.
//!
//! For `n >= 8` the complete set of length `n` is built from three explicit
//! families (plus complements):
//!
//! * `0^{2i-1} 1^{n-4i+1} 0^{2i-1} 1`
//! * `0 1^{2i-1} 0^{n-4i+1} 1^{2i-1}`
//! * `0 1^{n-2} 0`
//!
//! with `1 <= i <= n/4 - 1` when `n ≡ 0 (mod 4)` and `1 <= i <= (n-2)/4`
//! when `n ≡ 2 (mod 4)`. Lengths 4 and 6 are listed directly.

use std::collections::BTreeSet;

use crate::detector::{contains_mesosome, is_mesosome};
use crate::word::BinaryWord;

const LENGTH_4: [&str; 1] = ["0110"];
const LENGTH_6: [&str; 5] = ["001010", "010001", "010100", "011101", "011110"];

/// Decides minimal-forbidden status from the definition.
///
/// Every proper factor lies inside `w` minus its first or last symbol, so
/// checking those two is enough.
pub fn is_minimal_forbidden(w: &BinaryWord) -> bool {
    if !is_mesosome(w) {
        return false;
    }
    let n = w.len();
    let drop_first = BinaryWord::from_symbols(&w.symbols()[1..]).expect("binary");
    let drop_last = BinaryWord::from_symbols(&w.symbols()[..n - 1]).expect("binary");
    !contains_mesosome(&drop_first) && !contains_mesosome(&drop_last)
}

/// Upper index bound `i` for the two four-run families at length `n`.
fn family_bound(n: usize) -> usize {
    match n % 4 {
        0 => n / 4 - 1,
        _ => (n - 2) / 4,
    }
}

/// The starting-with-0 representatives of the families at even `n >= 8`.
fn family_words(n: usize) -> Vec<BinaryWord> {
    let mut out = Vec::new();
    for i in 1..=family_bound(n) {
        let outer = 2 * i - 1;
        let middle = n + 1 - 4 * i;
        out.push(BinaryWord::from_blocks(&[
            (0, outer),
            (1, middle),
            (0, outer),
            (1, 1),
        ]));
        out.push(BinaryWord::from_blocks(&[
            (0, 1),
            (1, outer),
            (0, middle),
            (1, outer),
        ]));
    }
    out.push(BinaryWord::from_blocks(&[(0, 1), (1, n - 2), (0, 1)]));
    out
}

/// All minimal forbidden words of length `n`, sorted lexicographically.
pub fn generate_minimal_forbidden(n: usize) -> Vec<BinaryWord> {
    let base: Vec<BinaryWord> = match n {
        _ if n % 2 == 1 || n < 4 => Vec::new(),
        4 => LENGTH_4
            .iter()
            .map(|s| s.parse().expect("literal"))
            .collect(),
        6 => LENGTH_6
            .iter()
            .map(|s| s.parse().expect("literal"))
            .collect(),
        _ => family_words(n),
    };
    let set: BTreeSet<BinaryWord> = base
        .iter()
        .flat_map(|w| [w.complement(), w.clone()])
        .collect();
    set.into_iter().collect()
}

/// `0` for odd `n` or `n < 4`, `2` at 4, `10` at 6, `n - 2` for
/// `n ≡ 0 (mod 4)` and `n` for `n ≡ 2 (mod 4)` beyond that.
pub fn count_minimal_forbidden(n: usize) -> usize {
    match n {
        _ if n % 2 == 1 || n < 4 => 0,
        4 => 2,
        6 => 10,
        _ if n.is_multiple_of(4) => n - 2,
        _ => n,
    }
}
