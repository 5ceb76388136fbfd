use thiserror::Error;

use crate::arith::Field;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("operators {0} and {1} do not commute")]
    NonCommuting(usize, usize),

    #[error("eigenvalue candidates are not pairwise distinct")]
    DuplicateCandidates,

    #[error("invalid permutation: {0}")]
    InvalidPerm(String),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("index {index} out of range {range}")]
    OutOfRange { index: usize, range: String },

    #[error("invalid multipartition: {0}")]
    InvalidMultiPartition(String),

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("node {0} is not addable")]
    NotAddable(String),

    #[error("node {0} is not removable")]
    NotRemovable(String),

    #[error("algebra parameters differ")]
    ParamsMismatch,

    #[error("singular matrix: {0}")]
    Singular(String),

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("ambient dimension {dim} exceeds the budget {budget}; pass --force to proceed")]
    Budget { dim: usize, budget: usize },

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
