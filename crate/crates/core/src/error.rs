use thiserror::Error;

/// Errors raised by the exact-algebra routines.
///
/// `SizeLimit` is kept separate from the other variants so front ends can
/// tell "refused to enumerate" apart from "bad input".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot lift an element of order {from} to order {to}: {from} does not divide {to}")]
    OrderMismatch { from: u32, to: u32 },

    #[error("malformed literal {literal:?}: {reason}")]
    Parse { literal: String, reason: String },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("invalid parameters: {0}")]
    Parameters(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("singular matrix: {0}")]
    Singular(String),

    #[error("vanishing minor on rows {rows:?} and columns {cols:?}")]
    VanishingMinor { rows: Vec<usize>, cols: Vec<usize> },

    #[error("zero value at coordinate {index} raised to negative power")]
    ZeroToNegativePower { index: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A lemma that the enumeration is supposed to confirm turned out false on
    /// a concrete input. Never expected; surfaced instead of panicking so the
    /// offending input can be reported.
    #[error("counterexample: {0}")]
    Counterexample(String),
}

pub type Result<T> = std::result::Result<T, Error>;
