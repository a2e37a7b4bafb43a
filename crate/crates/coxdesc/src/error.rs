use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("weights: {0}")]
    Weights(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Core(#[from] coxdesc_core::Error),
}

pub type CliResult<T> = Result<T, CliError>;

impl CliError {
    /// 2 for usage and input errors, 3 when a size guard trips, 1 when an
    /// internal cross-check fails.
    pub fn exit_code(&self) -> i32 {
        use coxdesc_core::Error as E;
        match self {
            CliError::Core(E::ResourceLimit { .. }) | CliError::Core(E::GroupTooLarge { .. }) => 3,
            CliError::Core(E::InternalInvariant(_)) => 1,
            _ => 2,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}
