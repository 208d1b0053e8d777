use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Engine(#[from] treegroups::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
}

impl CliError {
    /// 2 for bad input, 3 for resource caps, 1 for internal inconsistencies.
    pub fn exit_code(&self) -> u8 {
        use treegroups::Error as E;
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Json { .. } => 2,
            CliError::Engine(E::ResourceCap { .. }) => 3,
            CliError::Engine(E::Consistency(_)) => 1,
            CliError::Engine(_) => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
