mod derive;
mod domain;
mod eval;
mod verify;

use std::fs;
use std::io::Write;

pub use derive::derive;
pub use domain::wave_domain;
pub use eval::wave_eval;
pub use verify::{verify, RESIDUAL_TOL};

use fuzzy_wave_core::{AlphaGrid, FuzzyNumber};

use crate::args::{CoeffArgs, Command};
use crate::error::CliError;
use crate::formats::parse_fuzzy_number;

/// Result of a command that ran to completion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// A verification check failed; the message names it.
    Fail(String),
}

pub fn run(command: &Command, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match command {
        Command::Derive(a) => derive(a, out),
        Command::WaveDomain(a) => wave_domain(a, out),
        Command::WaveEval(a) => wave_eval(a, out),
        Command::Verify(a) => verify(a, out),
    }
}

pub(crate) fn coefficient(args: &CoeffArgs) -> Result<FuzzyNumber, CliError> {
    if let Some(path) = &args.coeff_file {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
        return Ok(parse_fuzzy_number(&text)?);
    }
    let grid = AlphaGrid::uniform(args.alpha_levels as usize)?;
    match args.coeff.as_deref().unwrap_or(&[1.0, 2.0, 3.0]) {
        &[a, b, c] if [a, b, c].iter().all(|v| v.is_finite()) => {
            Ok(FuzzyNumber::triangular(a, b, c, &grid)?)
        }
        other => Err(CliError::Usage(format!(
            "--coeff expects three finite numbers a,b,c, got {other:?}"
        ))),
    }
}

pub(crate) fn require(ok: bool, message: &str) -> Result<(), CliError> {
    if ok {
        Ok(())
    } else {
        Err(CliError::Usage(message.to_string()))
    }
}
