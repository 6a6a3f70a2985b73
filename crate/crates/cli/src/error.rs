use std::io;
use std::path::PathBuf;

use crate::formats::FormatError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("writing output: {0}")]
    Output(#[from] io::Error),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] fuzzy_wave_core::Error),
}

impl CliError {
    /// 2 for bad input, 3 for I/O failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Output(_) => 3,
            CliError::Format(FormatError::Csv(e)) if e.is_io_error() => 3,
            CliError::Format(FormatError::Json(e)) if e.is_io() => 3,
            _ => 2,
        }
    }
}
