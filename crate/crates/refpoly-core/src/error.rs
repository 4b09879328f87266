use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("empty vertex subset")]
    EmptyVertexSet,

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("point set is not full-dimensional (affine dimension {found}, ambient {ambient})")]
    NotFullDimensional { found: usize, ambient: usize },

    #[error("polyhedron is unbounded")]
    Unbounded,

    #[error("origin is not interior to the polytope")]
    OriginNotInterior,

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("invalid witness input: {0}")]
    InvalidWitness(String),

    #[error("point does not lie in the stated dilate")]
    PointOutsideDilate,

    #[error("point configuration error: {0}")]
    Configuration(String),

    #[error("variable order hypothesis violated: {0}")]
    OrderViolation(String),

    #[error("initial ideal is not squarefree: {0}")]
    NotSquarefree(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
