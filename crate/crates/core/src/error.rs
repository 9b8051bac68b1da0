use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("bad field: {0}")]
    BadField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("quiver is not acyclic")]
    NotAcyclic,
    #[error("representation has a projective summand isomorphic to {0}")]
    ProjectiveSummand(String),
    #[error("representation has an injective summand isomorphic to {0}")]
    InjectiveSummand(String),
    #[error("operation requires the Kronecker quiver")]
    NotKronecker,
    #[error("operation requires an indecomposable input")]
    NotIndecomposable,
    #[error("source and target must be free: {0}")]
    NotFree(String),
    #[error("window exhausted: {0}")]
    WindowExhausted(String),
    #[error("bad input: {0}")]
    BadInput(String),
}
