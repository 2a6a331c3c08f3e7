use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition {
        parts: Vec<usize>,
        reason: &'static str,
    },

    #[error("invalid composition {parts:?}: {reason}")]
    InvalidComposition {
        parts: Vec<usize>,
        reason: &'static str,
    },

    #[error("invalid multipartition: {0}")]
    InvalidMultipartition(String),

    #[error("dimension must be positive")]
    ZeroDimension,

    #[error("polynomial must be nonconstant")]
    ConstantPolynomial,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("matrix is empty")]
    EmptyMatrix,

    #[error("matrix is not square: row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("row {row}, column {column}: cannot parse {token:?}: {reason}")]
    Parse {
        row: usize,
        column: usize,
        token: String,
        reason: String,
    },

    #[error("malformed matrix document: {0}")]
    Document(String),
}
