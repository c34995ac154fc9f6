//! `cqca`: command-line access to the automaton algebra.

mod args;
mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use cqca_core::Error;

use args::{Cli, Format};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    /// 1 for mathematical rejections of the input, 2 for everything else.
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::Domain(_) | Error::InvalidAutomaton(_) | Error::DivisionByZero) => 1,
            _ => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(report) => {
            let out = match cli.format {
                Format::Text => report.text,
                Format::Json => serde_json::to_string_pretty(&report.json).expect("json value") + "\n",
            };
            // A closed pipe downstream is not an error of ours.
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::from(u8::from(report.negative))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
