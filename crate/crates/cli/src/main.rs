use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use fuzzy_wave::{run, thread_cap, Cli, CliError, Outcome};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match thread_cap().and_then(|_| execute(&cli)) {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Fail(message)) => {
            eprintln!("{message}");
            1
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let outcome = run(&cli.command, &mut out)?;
    out.flush()?;
    Ok(outcome)
}
