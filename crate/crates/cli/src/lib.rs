//! Command-line front end for the `cube_sections` library.

pub mod args;
pub mod commands;
pub mod record;
pub mod verify;

use std::path::PathBuf;

use serde_json::json;
use thiserror::Error;

use args::{Cli, Command};
use record::{render, OutputRecord, Rows};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_PATTERN: i32 = 4;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "CUBE_SECTIONS_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] cube_sections::Error),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("cannot write {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(cube_sections::Error::PatternViolation { .. }) => EXIT_PATTERN,
            CliError::Core(_) | CliError::Io { .. } => EXIT_DOMAIN,
            CliError::Usage(_) => EXIT_USAGE,
        }
    }
}

/// A finished command: the record, optional row data, and the exit code.
#[derive(Debug)]
pub struct Outcome {
    pub record: OutputRecord,
    /// Rows for CSV (and pretty, unless `pretty_rows` is set).
    pub rows: Option<Rows>,
    pub pretty_rows: Option<Rows>,
    pub exit_code: i32,
}

impl Outcome {
    pub fn new(record: OutputRecord) -> Self {
        Outcome {
            record,
            rows: None,
            pretty_rows: None,
            exit_code: EXIT_OK,
        }
    }

    pub fn render(&self, format: args::Format) -> String {
        let rows = match format {
            args::Format::Pretty => self.pretty_rows.as_ref().or(self.rows.as_ref()),
            _ => self.rows.as_ref(),
        };
        render(&self.record, rows, format)
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Volume(a) => commands::volume(a),
        Command::Classify(a) => commands::classify(a),
        Command::Roots(a) => commands::roots(a),
        Command::Table(a) => commands::table_cmd(a),
        Command::Sweep(a) => commands::sweep(a),
        Command::Verify(a) => {
            let checks = verify::run(a);
            let failed = checks.iter().filter(|c| !c.passed).count();
            let mut rows = Rows::new(&["suite", "check", "status", "detail"]);
            for c in &checks {
                let status = if c.passed { "pass" } else { "FAIL" };
                rows.push(vec![c.suite.into(), c.name.into(), status.into(), c.detail.clone()]);
            }
            let results = json!({
                "passed": checks.len() - failed,
                "failed": failed,
                "checks": checks,
            });
            let inputs = serde_json::to_value(a).expect("arguments serialize");
            let mut out = Outcome::new(OutputRecord::new("verify", inputs, results));
            out.rows = Some(rows);
            if failed > 0 {
                out.exit_code = EXIT_VERIFY;
            }
            Ok(out)
        }
    }
}

/// Runs a parsed command, writing to `--out` when given. Returns the text
/// for stdout and the exit code.
pub fn run(cli: &Cli) -> Result<(String, i32), CliError> {
    let outcome = execute(cli)?;
    let mut text = outcome.render(cli.format);
    if let Command::Verify(_) = cli.command {
        if cli.format == args::Format::Pretty {
            text += &format!(
                "{} passed, {} failed\n",
                outcome.record.results["passed"], outcome.record.results["failed"]
            );
        }
    }
    match &cli.out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            Ok((String::new(), outcome.exit_code))
        }
        None => Ok((text, outcome.exit_code)),
    }
}

/// Sizes the global thread pool from [`THREADS_ENV`], if set.
pub fn configure_threads() -> Result<(), CliError> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let k: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&k| k > 0)
            .ok_or_else(|| CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got {v:?}")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot size the thread pool: {e}")))?;
    }
    Ok(())
}
