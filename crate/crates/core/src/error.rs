use thiserror::Error;

/// Errors surfaced by the exact-arithmetic and algebra layers.
///
/// Every fallible operation reports through this type; nothing in the
/// library panics on user-supplied data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("zero cannot be raised to the negative power {0}")]
    ZeroToNegativePower(i64),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("unsupported vector dimension {0}: binary cross products exist only in dimensions 3 and 7")]
    UnsupportedVectorDimension(usize),

    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    #[error("coordinate count {got} does not match algebra dimension {dim}")]
    CoordinateCount { dim: usize, got: usize },

    #[error("basis element e0 is not a two-sided unit: c[{i}][{j}][{k}] = {found}, expected {expected}")]
    NonUnitalTable {
        i: usize,
        j: usize,
        k: usize,
        found: String,
        expected: String,
    },

    #[error("operation requires a conjugation signature, which this algebra does not define")]
    MissingConjugation,

    #[error("operation is defined only for named quaternion/octonion constructions")]
    NotNamedConstruction,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cross-product backends disagree: determinant gave {determinant}, quaternion gave {quaternion}")]
    CrossBackendMismatch {
        determinant: String,
        quaternion: String,
    },
}
