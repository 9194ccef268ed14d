//! Linear-time mesosome-freeness via run-length structure.
//!
//! A nonempty binary word is mesosome-free exactly when it, or its
//! complement, is one of
//!
//! * A: `0^i`
//! * B: `0^i 1^j`
//! * C: `0^i 1^j 0^k` with `j` odd
//! * D: `0^i 1 0 1^j`
//! * E: `0^i 1^j 0^k 1^l` with `j, k` odd, `i < k`, `j > l`
//! * F: `(01)^i` or `(01)^i 0`
//!
//! (all exponents at least 1). The forms overlap on short words; the label
//! returned is the first match in the order A, B, C, D, E, F.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{run_lengths, BinaryWord};

/// Exponents of a structural form, written for the variant starting with 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    /// `0^i`
    A { i: usize },
    /// `0^i 1^j`
    B { i: usize, j: usize },
    /// `0^i 1^j 0^k`, `j` odd
    C { i: usize, j: usize, k: usize },
    /// `0^i 1 0 1^j`
    D { i: usize, j: usize },
    /// `0^i 1^j 0^k 1^l`, `j, k` odd, `i < k`, `j > l`
    E {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    },
    /// `(01)^i`
    FEven { i: usize },
    /// `(01)^i 0`
    FOdd { i: usize },
}

impl Shape {
    pub fn label(&self) -> &'static str {
        match self {
            Shape::A { .. } => "A",
            Shape::B { .. } => "B",
            Shape::C { .. } => "C",
            Shape::D { .. } => "D",
            Shape::E { .. } => "E",
            Shape::FEven { .. } | Shape::FOdd { .. } => "F",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            Shape::A { i } | Shape::FEven { i } | Shape::FOdd { i } => vec![i],
            Shape::B { i, j } | Shape::D { i, j } => vec![i, j],
            Shape::C { i, j, k } => vec![i, j, k],
            Shape::E { i, j, k, l } => vec![i, j, k, l],
        }
    }

    /// Whether the exponents satisfy the side conditions of the form.
    pub fn is_well_formed(&self) -> bool {
        let odd = |x: usize| x % 2 == 1;
        let positive = self.params().iter().all(|&p| p >= 1);
        positive
            && match *self {
                Shape::C { j, .. } => odd(j),
                Shape::E { i, j, k, l } => odd(j) && odd(k) && i < k && j > l,
                _ => true,
            }
    }

    fn blocks(&self) -> Vec<(u8, usize)> {
        match *self {
            Shape::A { i } => vec![(0, i)],
            Shape::B { i, j } => vec![(0, i), (1, j)],
            Shape::C { i, j, k } => vec![(0, i), (1, j), (0, k)],
            Shape::D { i, j } => vec![(0, i), (1, 1), (0, 1), (1, j)],
            Shape::E { i, j, k, l } => vec![(0, i), (1, j), (0, k), (1, l)],
            Shape::FEven { i } => (0..2 * i).map(|p| ((p % 2) as u8, 1)).collect(),
            Shape::FOdd { i } => (0..=2 * i).map(|p| ((p % 2) as u8, 1)).collect(),
        }
    }
}

/// A structural form together with whether it describes the complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StructureForm {
    pub shape: Shape,
    /// Set when the classified word starts with 1.
    pub complemented: bool,
}

impl StructureForm {
    /// Rebuilds the word this form describes.
    pub fn to_word(&self) -> BinaryWord {
        let word = BinaryWord::from_blocks(&self.shape.blocks());
        if self.complemented {
            word.complement()
        } else {
            word
        }
    }

    pub fn label(&self) -> &'static str {
        self.shape.label()
    }

    pub fn params(&self) -> Vec<usize> {
        self.shape.params()
    }

    /// Serializable record used for JSON output.
    pub fn record(&self) -> FormRecord {
        FormRecord {
            form: Some(self.label()),
            params: Some(self.params()),
            complemented: Some(self.complemented),
        }
    }
}

impl fmt::Display for StructureForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.complemented {
            f.write_str("~")?;
        }
        let params: Vec<String> = self.params().iter().map(usize::to_string).collect();
        write!(f, "{}({})", self.label(), params.join(","))
    }
}

/// `{"form":"E","params":[1,3,3,1],"complemented":false}`, or `{"form":null}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormRecord {
    pub form: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complemented: Option<bool>,
}

impl FormRecord {
    pub fn not_avoiding() -> Self {
        Self {
            form: None,
            params: None,
            complemented: None,
        }
    }
}

/// Result of classifying a nonempty word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Free(StructureForm),
    NotAvoiding,
}

impl Classification {
    pub fn form(&self) -> Option<StructureForm> {
        match self {
            Classification::Free(form) => Some(*form),
            Classification::NotAvoiding => None,
        }
    }

    pub fn record(&self) -> FormRecord {
        self.form()
            .map_or_else(FormRecord::not_avoiding, |f| f.record())
    }
}

/// Classifies a nonempty word by its run lengths.
pub fn classify(w: &BinaryWord) -> Result<Classification> {
    let first = w.first().ok_or(Error::EmptyWord)?;
    let runs = run_lengths(w.symbols());
    Ok(match shape_of_runs(&runs) {
        Some(shape) => Classification::Free(StructureForm {
            shape,
            complemented: first == 1,
        }),
        None => Classification::NotAvoiding,
    })
}

/// Mesosome-freeness in `O(|w|)`. The empty word is free.
pub fn is_mesosome_free(w: &BinaryWord) -> bool {
    w.is_empty() || shape_of_runs(&run_lengths(w.symbols())).is_some()
}

/// The run lengths are read as if the word starts with 0; complement
/// handling is left to the caller.
fn shape_of_runs(runs: &[usize]) -> Option<Shape> {
    let odd = |x: usize| x % 2 == 1;
    match *runs {
        [i] => Some(Shape::A { i }),
        [i, j] => Some(Shape::B { i, j }),
        [i, j, k] if odd(j) => Some(Shape::C { i, j, k }),
        [i, 1, 1, j] => Some(Shape::D { i, j }),
        [i, j, k, l] if odd(j) && odd(k) && i < k && j > l => Some(Shape::E { i, j, k, l }),
        _ if runs.len() >= 5 && runs.iter().all(|&r| r == 1) => {
            let i = runs.len() / 2;
            Some(if runs.len().is_multiple_of(2) {
                Shape::FEven { i }
            } else {
                Shape::FOdd { i }
            })
        }
        _ => None,
    }
}
