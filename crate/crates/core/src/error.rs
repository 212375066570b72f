use thiserror::Error;

/// Errors raised by the symbol algebra, the decision procedures and the
/// truncated numerics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("affine map has no isolated fixed point (a = 1) or is constant (a = 0)")]
    DegenerateMap,
    #[error("inexact input: {0}")]
    InexactInput(&'static str),
    #[error("angle combination cannot be decided exactly (rational overflow)")]
    UnsupportedCombination,
    #[error("multiplier must be of the form d*exp(c z) with constant polynomial factor")]
    UnsupportedMultiplier,
    #[error("invalid angle: {0}")]
    InvalidAngle(&'static str),
    #[error("invalid multiplier: {0}")]
    InvalidMultiplier(&'static str),
    #[error("operator is not bounded on F2: {0}")]
    Unbounded(&'static str),
    #[error("matrix entry ({row}, {column}) exceeds the log-magnitude cap")]
    TruncationOverflow { row: usize, column: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("zero vector")]
    ZeroVector,
    #[error("power iteration did not converge after {iterations} steps (estimate {estimate}, last relative change {gap})")]
    NoConvergence {
        iterations: usize,
        estimate: f64,
        gap: f64,
    },
    #[error("orbit length {requested} exceeds the budget of {budget}")]
    BudgetExceeded { requested: usize, budget: usize },
    #[error("no invariant region is defined for the identity map")]
    RegionInvalid,
    #[error("invalid truncation parameters: {0}")]
    InvalidTruncation(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
