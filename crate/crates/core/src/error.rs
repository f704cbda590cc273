use thiserror::Error;

/// Errors raised by the library layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("degenerate Gram matrix")]
    Degenerate,

    #[error("Gram matrix is not symmetric")]
    NotSymmetric,

    #[error("not an integral lattice: {0}")]
    NonIntegral(String),

    #[error("invalid Dynkin component: {0}")]
    InvalidComponent(String),

    #[error("cannot parse Dynkin type `{0}`")]
    ParseType(String),

    #[error("unknown curve `{0}`")]
    UnknownCurve(String),

    #[error("malformed graph line {line}: {reason}")]
    GraphFormat { line: usize, reason: String },

    #[error("labeling is not admissible: {0}")]
    InadmissibleLabeling(String),

    #[error("unsupported automorphism order {0}")]
    UnsupportedOrder(u32),

    #[error("type {0} is not one of the surviving extremal types")]
    NotSurvivor(String),

    #[error("construction index must be in 1..=7, got {0}")]
    NoSuchConstruction(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
