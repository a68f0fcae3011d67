use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Malformed input file. `line` is 1-based and counts the header row.
    #[error("{}: {message}", location(path, *line))]
    Ingestion {
        path: PathBuf,
        line: Option<usize>,
        message: String,
    },

    #[error("group manifest {}: {message}", path.display())]
    Manifest { path: PathBuf, message: String },

    #[error("refused: {0}")]
    Refused(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

fn location(path: &std::path::Path, line: Option<usize>) -> String {
    match line {
        Some(line) => format!("{}:{line}", path.display()),
        None => path.display().to_string(),
    }
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code used by the command-line front end:
    /// 1 for bad input data, 2 for configuration errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Ingestion { .. } | Error::Manifest { .. } | Error::Io { .. } | Error::Json(_) => 1,
            Error::InvalidArgument(_) | Error::Refused(_) => 2,
        }
    }
}
