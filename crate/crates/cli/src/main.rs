use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use cube_sections::Error;
use cube_sections_cli::{args::Cli, configure_threads, run, CliError, EXIT_OK, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::from(EXIT_OK as u8),
                _ => ExitCode::from(EXIT_USAGE as u8),
            };
        }
    };
    let result = configure_threads().and_then(|_| run(&cli));
    match result {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::Core(Error::PatternViolation { s1, s2, .. }) = &e {
                for (name, runs) in [("S1", s1), ("S2", s2)] {
                    for r in runs {
                        eprintln!("  {name} ({}, {}): {}", r.start, r.end, r.sign);
                    }
                }
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
