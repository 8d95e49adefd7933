//! Front end for the `fiboper` binary: family specs, renderers, the
//! transcribed reference tables and the verification report.

pub mod commands;
pub mod family;
pub mod render;
pub mod transcription;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// A verification or consistency check failed; exit code 1.
    #[error("{0}")]
    Failure(String),
    #[error(transparent)]
    Core(#[from] fiboper_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) | CliError::Core(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
