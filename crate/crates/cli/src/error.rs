use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid configuration field `{field}`: {message}")]
    Validation { field: String, message: String },

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Solver(#[from] relgrad::Error),
}

impl HarnessError {
    pub fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        HarnessError::Validation {
            field: field.into(),
            message: message.into(),
        }
    }

    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        HarnessError::Io {
            context: context.into(),
            source,
        }
    }

    /// Process exit code: 1 for invalid input, 2 for I/O failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            HarnessError::Validation { .. } | HarnessError::Solver(_) => 1,
            HarnessError::Io { .. } => 2,
        }
    }
}

pub type Result<T, E = HarnessError> = std::result::Result<T, E>;
