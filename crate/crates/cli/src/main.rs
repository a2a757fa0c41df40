use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hopfmin_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match run(&cli) {
        Ok(out) => {
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let CliError::Selftest { report, .. } = &e {
                let _ = stdout.write_all(report.as_bytes());
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
