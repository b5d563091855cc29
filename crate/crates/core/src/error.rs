use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("edge {{{0}, {1}}} is not in the graph")]
    UnknownEdge(String, String),

    #[error("self-loop at `{0}`")]
    SelfLoop(String),

    #[error("{what} has size {size}, above the limit of {limit}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("invalid parameter for {context}: {constraint}")]
    InvalidParameter {
        context: String,
        constraint: String,
    },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(context: impl Into<String>, constraint: impl Into<String>) -> Self {
        Error::InvalidParameter {
            context: context.into(),
            constraint: constraint.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
