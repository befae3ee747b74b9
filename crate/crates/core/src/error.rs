use crate::scalars::ScalarError;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("{0}")]
    Usage(String),
    /// An internal cross-check failed.
    #[error("consistency failure: {0}")]
    Consistency(String),
    /// A computed result contradicts a statement the library verifies.
    #[error("THEOREM VIOLATION: {0}")]
    TheoremViolation(String),
}
