//! Report building and configuration for the `qec5` command-line tool.
//!
//! The binary in this package exposes the simulator as subcommands
//! (`codewords`, `syndrome-table`, `run`, `sweep`, `baseline`,
//! `advantage`) that emit deterministic JSON (or CSV fidelity tables).
//! This library holds the serializable report types, the noise-schedule
//! configuration format, and the command implementations, so integration
//! tests can drive everything without spawning the binary.

pub mod commands;
pub mod config;
pub mod report;

/// Errors surfaced by command implementations, split by exit code:
/// usage problems exit with 2, internal failures with 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Internal(msg) => write!(f, "error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<qec5::Error> for CliError {
    fn from(e: qec5::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
