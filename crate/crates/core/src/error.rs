//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error in {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    /// A quantity left the representable floating-point range.
    #[error("overflow in {op} at index {index}")]
    Overflow { op: &'static str, index: usize },

    /// An iteration failed to converge.
    #[error("{op} failed to converge: {detail}")]
    Convergence { op: &'static str, detail: String },

    /// Contour refinement stalled; carries the last two trapezoid values.
    #[error("contour integral did not converge: last values {last:?}, {previous:?}")]
    ContourNonConvergence {
        last: (f64, f64),
        previous: (f64, f64),
    },

    /// Partitions passed to an operation live on incompatible levels.
    #[error("level mismatch: expected levels {expected}, got {got}")]
    LevelMismatch { expected: String, got: String },

    /// Points passed to a correlation determinant must be pairwise distinct.
    #[error("duplicated point (s={s}, n={n}) in correlation input")]
    DuplicatePoint { s: u32, n: u32 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
