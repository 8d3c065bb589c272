use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use toeplitz_cli::{run, Cli, CliError};

fn emit() -> Result<(), CliError> {
    let out = run(Cli::parse())?;
    if let Some((path, text)) = &out.file {
        std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    }
    print!("{}", out.stdout);
    std::io::stdout().flush().ok();
    match out.failed_claims {
        0 => Ok(()),
        n => Err(CliError::ClaimsFailed(n)),
    }
}

fn main() -> ExitCode {
    match emit() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
