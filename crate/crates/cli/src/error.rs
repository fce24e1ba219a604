use std::io;
use std::path::PathBuf;

use expander_core::ErrorKind;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] expander_core::Error),
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Write { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Replay(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    /// 1 usage, 2 input data, 3 refused, 4 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e.kind() {
                ErrorKind::Usage => 1,
                ErrorKind::Input => 2,
                ErrorKind::Refused => 3,
                ErrorKind::Internal => 4,
            },
            CliError::Usage(_) => 1,
            CliError::Read { .. } => 2,
            CliError::Write { .. } | CliError::Replay(_) | CliError::Internal(_) => 4,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
