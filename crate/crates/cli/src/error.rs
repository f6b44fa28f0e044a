use std::io;
use std::path::PathBuf;

use numrad_core::Error as CoreError;

/// Failure of a CLI command, carrying its process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Input { path: PathBuf, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    UnknownTag(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("write failed: {0}")]
    Output(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input { .. } | CliError::Usage(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::UnknownTag(_) => 4,
            CliError::Output(_) => 1,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::UnknownBound(_) => CliError::UnknownTag(e.to_string()),
            CoreError::NoConvergence(_)
            | CoreError::NotHermitian { .. }
            | CoreError::NotPositiveSemidefinite { .. } => CliError::Numerical(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => CliError::Output(io),
            other => CliError::Output(io::Error::other(format!("{other:?}"))),
        }
    }
}
