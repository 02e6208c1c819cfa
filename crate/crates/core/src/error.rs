use thiserror::Error;

/// Errors shared by every module of the toolkit.
///
/// `Domain` means the inputs were structurally valid but the requested
/// quantity is undefined for them (empty distribution, zero separation,
/// disconnected graph). `Config` means a parameter or option violated a
/// precondition before any computation started. `Internal` flags conditions
/// that indicate a bug, such as a compression round-trip mismatch.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is disconnected: component sizes {components:?}")]
    Disconnected { components: Vec<usize> },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
