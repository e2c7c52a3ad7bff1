use thiserror::Error;

/// Errors raised by the algebraic and geometric kernels.
///
/// "Not found" outcomes of searches (recurrence guessing, quasi-polynomial
/// fitting) are not errors; those operations return `Option`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("operation requires {expected} variable(s), got {got}")]
    WrongVarCount { expected: usize, got: usize },

    #[error("variable index {index} out of range for {vars} variable(s)")]
    InvalidIndex { index: usize, vars: usize },

    #[error("zero direction vector")]
    ZeroDirection,

    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,

    #[error("division is not exact")]
    InexactDivision,

    #[error("division by zero")]
    DivisionByZero,

    #[error("leading coefficient is not a unit (monomial) in {vars} variables")]
    NonUnitLeading { vars: usize },

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed input: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
