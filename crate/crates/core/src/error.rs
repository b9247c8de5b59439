use std::fmt;

/// Errors raised while building, querying or loading an index.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("index out of range: {what} {index} (valid 1..={bound})")]
    OutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },
    #[error("corrupt index: {0}")]
    Corrupt(String),
    #[error("unsupported format version {found} (expected {expected})")]
    Version { found: u32, expected: u32 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl fmt::Display) -> Self {
        Error::InvalidInput(msg.to_string())
    }

    pub(crate) fn corrupt(msg: impl fmt::Display) -> Self {
        Error::Corrupt(msg.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
