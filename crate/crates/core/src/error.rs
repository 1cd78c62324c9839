use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("zero-set query at |xi| = {radius} exceeds enumerated horizon {horizon}")]
    HorizonExceeded { radius: f64, horizon: f64 },

    #[error("root refinement failed to converge near x = {0}")]
    RefinementFailed(f64),

    #[error("exact mode requires rational coordinates: {0}")]
    ExactModeUnavailable(String),

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
