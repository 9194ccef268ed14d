//! Infinite mesosome-free words and finite extendability.
//!
//! Up to complement, every infinite mesosome-free binary word is one of
//! `0^ω`, `0^i 1^ω`, `0^i 1^{2j-1} 0^ω`, `0^i 1 0 1^ω` or `(01)^ω`.

use std::fmt;

use crate::classifier::{classify, is_mesosome_free, Shape};
use crate::counting::EnumerationCap;
use crate::error::Result;
use crate::word::BinaryWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InfiniteShape {
    /// `0^ω`
    AllZero,
    /// `0^i 1^ω`
    ZerosThenOnes { i: usize },
    /// `0^i 1^{2j-1} 0^ω`
    ZerosOnesZeros { i: usize, j: usize },
    /// `0^i 1 0 1^ω`
    ZeroBlockTenOnes { i: usize },
    /// `(01)^ω`
    Alternating,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InfiniteForm {
    pub shape: InfiniteShape,
    pub complemented: bool,
}

impl InfiniteForm {
    pub fn new(shape: InfiniteShape, complemented: bool) -> Self {
        Self {
            shape,
            complemented,
        }
    }

    /// Symbol at 0-based position `p` of the infinite word.
    pub fn symbol_at(&self, p: usize) -> u8 {
        let plain = match self.shape {
            InfiniteShape::AllZero => 0,
            InfiniteShape::ZerosThenOnes { i } => u8::from(p >= i),
            InfiniteShape::ZerosOnesZeros { i, j } => u8::from(p >= i && p < i + 2 * j - 1),
            InfiniteShape::ZeroBlockTenOnes { i } => u8::from(p >= i && p != i + 1),
            InfiniteShape::Alternating => (p % 2) as u8,
        };
        plain ^ u8::from(self.complemented)
    }

    /// The first `n` symbols.
    pub fn prefix(&self, n: usize) -> BinaryWord {
        let symbols: Vec<u8> = (0..n).map(|p| self.symbol_at(p)).collect();
        BinaryWord::from_symbols(&symbols).expect("binary")
    }
}

impl fmt::Display for InfiniteForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.complemented {
            f.write_str("~")?;
        }
        match self.shape {
            InfiniteShape::AllZero => write!(f, "0^w"),
            InfiniteShape::ZerosThenOnes { i } => write!(f, "0^{i} 1^w"),
            InfiniteShape::ZerosOnesZeros { i, j } => write!(f, "0^{i} 1^{} 0^w", 2 * j - 1),
            InfiniteShape::ZeroBlockTenOnes { i } => write!(f, "0^{i} 10 1^w"),
            InfiniteShape::Alternating => write!(f, "(01)^w"),
        }
    }
}

/// Every form with `i <= i_max` and `j <= j_max`, in both polarities.
pub fn canonical_forms(i_max: usize, j_max: usize) -> Vec<InfiniteForm> {
    let mut shapes = vec![InfiniteShape::AllZero];
    shapes.extend((1..=i_max).map(|i| InfiniteShape::ZerosThenOnes { i }));
    for i in 1..=i_max {
        shapes.extend((1..=j_max).map(|j| InfiniteShape::ZerosOnesZeros { i, j }));
    }
    shapes.extend((1..=i_max).map(|i| InfiniteShape::ZeroBlockTenOnes { i }));
    shapes.push(InfiniteShape::Alternating);

    [false, true]
        .into_iter()
        .flat_map(|c| shapes.iter().map(move |&s| InfiniteForm::new(s, c)))
        .collect()
}

/// True iff `w` is a prefix of an infinite mesosome-free word: `w` is empty,
/// or mesosome-free and not of the four-run form `0^i 1^j 0^k 1^l` with
/// `i < k`, `j > l` (or its complement).
pub fn is_infinitely_extendable(w: &BinaryWord) -> bool {
    if w.is_empty() {
        return true;
    }
    match classify(w).ok().and_then(|c| c.form()) {
        Some(form) => !matches!(form.shape, Shape::E { .. }),
        None => false,
    }
}

/// Brute-force check: does some mesosome-free word of length `2|w| + 2`
/// start with `w`? Depth-first, pruned by the classifier. Requires
/// `|w| <= cap`.
///
/// The depth suffices: a free word that is not extendable has shape
/// `0^i 1^j 0^k 1^l` with `l < j`, and only `j - l - 1 < |w|` further 1s
/// keep it free.
pub fn extendable_oracle(w: &BinaryWord, cap: EnumerationCap) -> Result<bool> {
    cap.check(w.len())?;
    if !is_mesosome_free(w) {
        return Ok(false);
    }
    let target = 2 * w.len() + 2;
    let mut buf = w.clone();
    Ok(extend(&mut buf, target))
}

fn extend(buf: &mut BinaryWord, target: usize) -> bool {
    if buf.len() == target {
        return true;
    }
    for s in [0, 1] {
        buf.push(s);
        let found = is_mesosome_free(buf) && extend(buf, target);
        buf.pop();
        if found {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn prefix_examples() {
        let alt = InfiniteForm::new(InfiniteShape::Alternating, false);
        assert_eq!(alt.prefix(5), w("01010"));
        let zoz = InfiniteForm::new(InfiniteShape::ZerosOnesZeros { i: 2, j: 2 }, false);
        assert_eq!(zoz.prefix(8), w("00111000"));
        let ones = InfiniteForm::new(InfiniteShape::AllZero, true);
        assert_eq!(ones.prefix(3), w("111"));
        let ten = InfiniteForm::new(InfiniteShape::ZeroBlockTenOnes { i: 2 }, false);
        assert_eq!(ten.prefix(7), w("0010111"));
        assert_eq!(ten.prefix(0), w(""));
    }

    #[test]
    fn display() {
        let zoz = InfiniteForm::new(InfiniteShape::ZerosOnesZeros { i: 2, j: 2 }, false);
        assert_eq!(zoz.to_string(), "0^2 1^3 0^w");
        assert_eq!(
            InfiniteForm::new(InfiniteShape::Alternating, true).to_string(),
            "~(01)^w"
        );
    }

    #[test]
    fn canonical_form_lists() {
        assert_eq!(canonical_forms(1, 1).len(), 10);
        let forms = canonical_forms(2, 2);
        assert!(forms.contains(&InfiniteForm::new(
            InfiniteShape::ZerosOnesZeros { i: 2, j: 2 },
            false
        )));
        assert_eq!(forms.len(), 2 * (1 + 2 + 4 + 2 + 1));
    }

    #[test]
    fn extendability_examples() {
        assert!(is_infinitely_extendable(&w("0001")));
        assert!(!is_infinitely_extendable(&w("01110001")));
        assert!(is_infinitely_extendable(&w("")));
        assert!(!is_infinitely_extendable(&w("0110")));
    }

    #[test]
    fn oracle_examples() {
        let cap = EnumerationCap::DEFAULT;
        assert_eq!(extendable_oracle(&w("01010"), cap), Ok(true));
        assert_eq!(extendable_oracle(&w("0110"), cap), Ok(false));
        assert_eq!(extendable_oracle(&w("01110001"), cap), Ok(false));
        assert!(extendable_oracle(&w("0101"), EnumerationCap(3)).is_err());
    }
}
