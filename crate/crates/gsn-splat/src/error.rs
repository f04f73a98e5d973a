//! Error type shared by the splat domain operations.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SplatError {
    /// Precondition violation on an operation argument.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Malformed splat file; `offset` is the byte position of the defect.
    #[error("splat format error at byte {offset}: {message}")]
    Format { offset: u64, message: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl SplatError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        SplatError::InvalidArgument(msg.into())
    }

    pub fn format(offset: u64, msg: impl Into<String>) -> Self {
        SplatError::Format {
            offset,
            message: msg.into(),
        }
    }
}
