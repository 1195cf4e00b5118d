use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A malformed literal or file.
///
/// `offset` is the 0-based byte offset of the offending character within the
/// literal or the line; `line` is 1-based and only set for file input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: Option<usize>,
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        Self {
            line: None,
            offset,
            message: message.into(),
        }
    }

    pub fn at_line(line: usize, offset: usize, message: impl Into<String>) -> Self {
        Self {
            line: Some(line),
            offset,
            message: message.into(),
        }
    }

    /// Rebases an error from a single token onto its position in a file.
    pub(crate) fn within(self, line: usize, token_offset: usize) -> Self {
        Self {
            line: Some(line),
            offset: token_offset + self.offset,
            message: self.message,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(
                f,
                "parse error at line {line}, column {}: {}",
                self.offset + 1,
                self.message
            ),
            None => write!(f, "parse error at byte {}: {}", self.offset, self.message),
        }
    }
}
