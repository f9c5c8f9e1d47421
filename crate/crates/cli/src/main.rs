use std::process::ExitCode;

use clap::Parser;
use starkit_cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    match execute(&cli, &mut stdout.lock()) {
        Ok(status) => ExitCode::from(status.exit_code()),
        Err(e) => {
            eprintln!("starkit: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
