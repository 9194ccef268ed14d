use thiserror::Error;

/// Errors raised by word construction and the bounded search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol at position {position}: expected '0' or '1'")]
    InvalidSymbol { position: usize },

    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("run {index} has length zero")]
    ZeroRun { index: usize },

    #[error("factor [{start}, {start}+{len}) out of range for word of length {word_len}")]
    OutOfRange {
        start: usize,
        len: usize,
        word_len: usize,
    },

    #[error("length {requested} exceeds the enumeration cap of {cap}")]
    BoundExceeded { requested: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
