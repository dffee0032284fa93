use thiserror::Error;

use crate::trace::RunTrace;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("vector has a non-finite component at index {index}")]
    NonFinite { index: usize },

    #[error("vector must have at least one component")]
    EmptyVector,

    #[error("oracle misconfigured: {0}")]
    OracleConfig(String),

    /// The objective or its gradient became non-finite. Carries the trace
    /// recorded up to the last finite iterate.
    #[error("run diverged after {} accepted iterations", .trace.records().len())]
    Diverged { trace: Box<RunTrace> },
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
