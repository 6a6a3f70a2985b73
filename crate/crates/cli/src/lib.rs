//! Command-line front end for `fuzzy-wave-core`, plus the JSON and CSV
//! formats it reads and writes.

pub mod args;
pub mod commands;
pub mod error;
pub mod formats;

pub use args::Cli;
pub use commands::{run, Outcome};
pub use error::CliError;

/// Environment variable capping internal parallelism.
pub const THREADS_VAR: &str = "FUZZY_WAVE_THREADS";

/// Reads `FUZZY_WAVE_THREADS`; unset means no cap.
pub fn thread_cap() -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_VAR) {
        Err(std::env::VarError::NotPresent) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!(
                "{THREADS_VAR} must be a positive integer, got {v:?}"
            ))),
        },
        Err(e) => Err(CliError::Usage(format!("{THREADS_VAR}: {e}"))),
    }
}
