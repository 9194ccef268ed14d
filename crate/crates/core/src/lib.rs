//! Mesosome avoidance in binary words.
//!
//! A *mesosome* is a word `x·x'` where `x'` is a cyclic rotation of `x` and
//! `x' != x`. This crate detects mesosome factors by definition, decides
//! mesosome-freeness in linear time from run lengths, counts mesosome-free
//! words of each length exactly, decides whether a finite word extends to an
//! infinite mesosome-free word, and lists the minimal forbidden words.
//!
//! ```
//! use mesolib::{BinaryWord, detector, classifier};
//!
//! let w: BinaryWord = "01110001".parse().unwrap();
//! assert!(classifier::is_mesosome_free(&w));
//! assert!(!detector::contains_mesosome(&w));
//! assert_eq!(mesolib::counting::m_closed_form::<u64>(17), 248);
//! ```

pub mod classifier;
pub mod cli;
pub mod counting;
pub mod detector;
pub mod error;
pub mod infinite;
pub mod minimal_forbidden;
pub mod word;

pub use classifier::{Classification, Shape, StructureForm};
pub use counting::{Count, CountBreakdown, EnumerationCap};
pub use detector::MesosomeOccurrence;
pub use error::{Error, Result};
pub use infinite::{InfiniteForm, InfiniteShape};
pub use word::{BinaryWord, RunLengthEncoding};

pub use num_bigint::BigUint;

/// Per-run-count breakdown in machine integers.
pub type Breakdown = CountBreakdown<u64>;

/// Per-run-count breakdown in arbitrary precision.
pub type BigBreakdown = CountBreakdown<BigUint>;
