use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("operator is not a Nijenhuis operator: {0}")]
    NotNijenhuis(String),
    #[error("operator is not equivariant: {0}")]
    NotEquivariant(String),
    #[error("operator is not a Rota-Baxter operator: {0}")]
    NotRotaBaxter(String),
    #[error("precondition failed: {0}")]
    PrereqFailed(String),
    #[error("missing operator: {0}")]
    MissingOperator(String),
    #[error("representation carries no compatibility operator T")]
    MissingT,
    #[error("invalid cobracket: {0}")]
    InvalidCobracket(String),
    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),
    #[error("not a matched pair: {0}")]
    NotMatchedPair(String),
    #[error("subspaces are not complementary: {0}")]
    NotComplementary(String),
    #[error("not a Lie bialgebra: {0}")]
    NotBialgebra(String),
    #[error("not an ENL bialgebra: {0}")]
    NotEnlBialgebra(String),
    #[error("symmetric part of r is not ad-invariant: {0}")]
    SymmetricPartNotInvariant(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error in `{entity}`: {message}")]
    Validation { entity: String, message: String },
    #[error("dimension {dim} of `{entity}` exceeds the cap of {cap}")]
    DimensionCap { entity: String, dim: usize, cap: usize },
    #[error("unknown task: {0}")]
    UnknownTask(String),
    #[error("task `{task}`: {source}")]
    Task { task: String, source: Box<Error> },
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::ShapeMismatch(msg.into())
    }

    pub(crate) fn prereq(msg: impl Into<String>) -> Self {
        Error::PrereqFailed(msg.into())
    }

    pub(crate) fn validation(entity: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            entity: entity.into(),
            message: message.into(),
        }
    }
}
