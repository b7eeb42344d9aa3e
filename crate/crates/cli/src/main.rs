use std::process::ExitCode;

use clap::Parser;
use kitaev_cli::args::Cli;

fn main() -> ExitCode {
    match kitaev_cli::run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
