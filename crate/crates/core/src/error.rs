use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("unsupported modulus: {0}")]
    UnsupportedModulus(String),
    #[error("non-integral value where a ring element was required: {0}")]
    NonIntegral(String),
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("constraints do not span the lattice (rank {got} < {need})")]
    ConstraintsDoNotSpan { got: usize, need: usize },
    #[error("unassigned generator label: {0}")]
    UnassignedLabel(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("unit normalization obstructed: {0}")]
    NormalizationObstruction(String),
    #[error("degenerate form")]
    DegenerateForm,
    #[error("enumeration volume too large: {0}")]
    EnumerationTooLarge(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
