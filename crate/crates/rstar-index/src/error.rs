use std::io;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input text is empty")]
    EmptyText,
    #[error("input text contains the reserved sentinel byte 0 at offset {0}")]
    SentinelInText(usize),
    #[error("pattern is empty")]
    EmptyPattern,
    #[error("pattern contains the reserved sentinel byte 0 at offset {0}")]
    SentinelInPattern(usize),
    #[error("index was built without the reverse half; rightmost queries are unsupported")]
    RightmostUnavailable,
    #[error("malformed index: {0}")]
    MalformedIndex(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
