use thiserror::Error;

use crate::scalar::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: Ring, found: Ring },
    #[error("matrix is singular")]
    Singular,
    #[error("linear system has no unique solution")]
    NoUniqueSolution,
    #[error("invalid form: {0}")]
    InvalidForm(String),
    #[error("operation not defined for this form kind: {0}")]
    WrongKind(String),
    #[error("form types differ")]
    TypeMismatch,
    #[error("form is not split")]
    NotSplit,
    #[error("no rational isotropic vector found")]
    NotFound,
    #[error("invalid semiinvolution: {0}")]
    InvalidSemiinvolution(String),
    #[error("semiinvolution is not consistent with the form")]
    NotConsistent,
    #[error("consistency constant {0} is not ±1")]
    NotPlusMinusOne(String),
    #[error("wrong species for this construction: {0}")]
    WrongSpecies(String),
    #[error("Cayley sampler exhausted its retries")]
    SamplerExhausted,
    #[error("unknown series id {0}")]
    UnknownEntry(usize),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("group element is not in the group")]
    NotInGroup,
    #[error("pair of subspaces is not a point of this space")]
    NotAPoint,
    #[error("subspace is not transverse to the decomposition")]
    NotTransverse,
    #[error("coordinates violate the shape conditions: {0}")]
    ShapeViolation(String),
    #[error("image left the chart (A + BR is singular)")]
    ChartBoundary,
    #[error("series {0} is not a starred series")]
    NotStar(usize),
    #[error("element does not preserve the restricted managing form")]
    NotInUDprime,
    #[error("operation needs {0}")]
    MissingStructure(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
