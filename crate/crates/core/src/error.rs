use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by engine construction, ball building, metric evaluation and
/// experiment plumbing.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid engine: {0}")]
    InvalidEngine(String),

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("size cap exceeded: {what} reached {count} (cap {cap})")]
    SizeCap {
        what: &'static str,
        count: usize,
        cap: usize,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("index {index} out of range (size {size})")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("matrix size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("structural error: {0}")]
    Structure(String),

    #[error("surjection check failed: {0}")]
    Surjection(String),

    #[error("tower incompatible: {0}")]
    Tower(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code used by the command-line runner.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Syntax { .. } | Error::InvalidEngine(_) => 2,
            Error::InvalidTable(_) | Error::Tower(_) | Error::Surjection(_) => 2,
            Error::SizeCap { .. } => 3,
            Error::Io { .. } => 4,
            Error::Parse { .. } => 4,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
