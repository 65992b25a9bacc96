//! Command-line front end for the `qgamma` library.
//!
//! Every subcommand renders a CSV table in memory and writes it only after
//! the computation has finished, so a failing run never leaves a partial file.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{CommandFactory, FromArgMatches};

mod args;
mod bounds;
mod config;
mod eval;
pub mod format;
mod qlimit;
mod scan;
mod verify;

pub use args::Cli;
use args::Command;

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    ExpectationFailed = 1,
    Usage = 2,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] qgamma::Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Rendered CSV plus whether every expectation held.
pub struct Report {
    pub csv: Vec<u8>,
    pub passed: bool,
}

/// Finds the `--config` path and the subcommand token without validating
/// anything else, so a config file can supply otherwise required flags.
fn prescan(args: &[OsString]) -> (Option<std::path::PathBuf>, Option<String>) {
    let mut path = None;
    let mut sub = None;
    let mut iter = args.iter().skip(1);
    while let Some(a) = iter.next() {
        let a = a.to_string_lossy();
        if a == "--config" {
            path = iter.next().map(std::path::PathBuf::from);
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(p.into());
        } else if sub.is_none() && !a.starts_with('-') {
            sub = Some(a.into_owned());
        }
    }
    (path, sub)
}

fn parse_cli(args: Vec<OsString>) -> Result<Cli, clap::Error> {
    let cmd = Cli::command();
    let args = match prescan(&args) {
        (Some(path), Some(sub)) if cmd.find_subcommand(&sub).is_some() => config::load(&path)
            .and_then(|entries| config::merge(&cmd, args, &sub, &entries))
            .map_err(|e| {
                cmd.clone()
                    .error(clap::error::ErrorKind::InvalidValue, e.to_string())
            })?,
        _ => args,
    };
    let matches = cmd.try_get_matches_from(args)?;
    Cli::from_arg_matches(&matches)
}

/// Runs the command and returns its report without writing anything.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Eval(a) => eval::run(a),
        Command::Verify(a) => verify::run(a),
        Command::ScanKernel(a) => scan::run(a),
        Command::Bounds(a) => bounds::run(a),
        Command::QLimitTable(a) => qlimit::run(a),
    }
}

fn output_path(cli: &Cli) -> Option<&Path> {
    match &cli.command {
        Command::Eval(a) => a.out.output.as_deref(),
        Command::Verify(a) => a.out.output.as_deref(),
        Command::ScanKernel(a) => a.out.output.as_deref(),
        Command::Bounds(a) => a.out.output.as_deref(),
        Command::QLimitTable(a) => a.out.output.as_deref(),
    }
}

fn emit(path: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: "stdout".into(),
                    source,
                })
        }
    }
}

/// Entry point used by the binary; returns the process exit status.
pub fn run<I, T>(args: I) -> Status
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match parse_cli(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                Status::Usage
            } else {
                Status::Ok
            };
        }
    };
    let result = execute(&cli).and_then(|report| {
        emit(output_path(&cli), &report.csv)?;
        Ok(report.passed)
    });
    match result {
        Ok(true) => Status::Ok,
        Ok(false) => Status::ExpectationFailed,
        Err(e) => {
            eprintln!("error: {}", one_line(&e));
            Status::Usage
        }
    }
}

fn one_line(e: &CliError) -> String {
    e.to_string().replace('\n', " ")
}
