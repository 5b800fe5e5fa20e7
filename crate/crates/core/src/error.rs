use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("unknown vertex label {0}")]
    UnknownLabel(u64),

    #[error("graph is not connected ({components} components)")]
    NotConnected { components: usize },

    #[error("graph is not outerplanar: {0}")]
    NotOuterplanar(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("no fixed point after {iterations} iterations (running intersection has {size} vertices)")]
    NoFixedPoint { iterations: usize, size: usize },
}

impl Error {
    /// Short machine-readable tag used by the CLI and the C API.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::Io { .. } => "io",
            Error::VertexOutOfRange { .. } => "vertex-out-of-range",
            Error::UnknownLabel(_) => "unknown-label",
            Error::NotConnected { .. } => "not-connected",
            Error::NotOuterplanar(_) => "not-outerplanar",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::NoFixedPoint { .. } => "no-fixed-point",
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
