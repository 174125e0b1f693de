use thiserror::Error;

/// Errors raised by the algebra, the constructions and the verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("missing table entry: {0}")]
    MissingEntry(String),
    #[error("degree budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("series precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("singular Gram matrix: {0}")]
    SingularGram(String),
    #[error("non-reduced word: {0}")]
    NonReducedWord(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
