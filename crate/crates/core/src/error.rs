use thiserror::Error;

/// Errors raised by the engine.
///
/// Empty polyhedra are values, not errors; see [`crate::Polyhedron::is_empty`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("affine tropical combination needs min(coefficients) = 0, got {min}")]
    CoefficientNormalization { min: String },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("zero vector")]
    ZeroVector,
    #[error("halfspace normal is zero")]
    ZeroNormal,
    #[error("not a linear space: {0}")]
    NotLinear(String),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix too large for exact minor enumeration: {size} > {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("vector {0:?} is a multiple of the all-ones vector")]
    LinealityDirection(Vec<i64>),
    #[error("curve is not balanced: weighted ray sum is {0:?}")]
    NotBalanced(Vec<i64>),
    #[error("expected an object in R^2, got ambient dimension {0}")]
    NotTwoDimensional(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable name used in JSON diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::CoefficientNormalization { .. } => "CoefficientNormalization",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::ZeroVector => "ZeroVector",
            Error::ZeroNormal => "ZeroNormal",
            Error::NotLinear(_) => "NotLinear",
            Error::NotSquare { .. } => "NotSquare",
            Error::TooLarge { .. } => "TooLarge",
            Error::LinealityDirection(_) => "LinealityDirection",
            Error::NotBalanced(_) => "NotBalanced",
            Error::NotTwoDimensional(_) => "NotTwoDimensional",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
