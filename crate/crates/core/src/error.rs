use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("cycle basis does not belong to this graph: {0}")]
    BasisMismatch(String),

    #[error("graph has {components} connected components; use the extended (component-sign) variant")]
    Disconnected { components: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular, determinant has no sign")]
    Singular,

    #[error("induced action on H1 is not unimodular: det = {det}")]
    NotUnimodular { det: BigInt },
}

pub type Result<T> = std::result::Result<T, Error>;
