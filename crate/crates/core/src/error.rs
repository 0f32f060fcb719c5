use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("pole of the zeta function at s = 1")]
    Pole,

    #[error("singularity: {0}")]
    Singularity(String),

    #[error("outside the documented accuracy envelope: {0}")]
    AccuracyUnsupported(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(String),

    #[error("format error at line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("non-finite value produced by {0}")]
    NonFinite(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
