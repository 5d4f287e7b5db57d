use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use waveplan_cli::run::{run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&config, &mut out) {
        Ok(()) => {
            let _ = out.flush();
            ExitCode::SUCCESS
        }
        Err(err) => {
            let _ = out.flush();
            eprintln!("{err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
