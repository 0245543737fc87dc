use thiserror::Error;

use crate::word::Word;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed morphism document. `line` is 1-based; 0 means the whole document.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid morphism: {0}")]
    Validation(String),

    #[error("start letter `{letter}` is not prolongable: {reason}")]
    NotProlongable { letter: String, reason: String },

    #[error("resource budget exceeded: need {needed} bytes, budget is {budget} bytes")]
    Resource { needed: usize, budget: usize },

    /// A caller broke an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// An internal cross-check failed. This always indicates a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("morphism has no grading")]
    MissingGrading,

    #[error("no split u = ab with ba absent exists for a word of length {}", .0.len())]
    NoSplit(Word),

    #[error("recurrence fails at index {index}")]
    RecurrenceMismatch { index: usize },
}
