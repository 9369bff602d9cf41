//! Command-line front end for the `mstaq` qubit toolkit.

pub mod commands;
pub mod parse;

use thiserror::Error;

pub use commands::{Backend, Report, Target};
pub use parse::{format_circuit, parse_circuit, Diagnostic};

/// Exit status for a failed verification step.
pub const EXIT_VERIFY: u8 = 1;
/// Exit status for parse and usage errors.
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}", .0.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("\n"))]
    Parse(Vec<Diagnostic>),

    #[error("{0}")]
    Usage(String),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] mstaq::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(_) => EXIT_VERIFY,
            _ => EXIT_USAGE,
        }
    }
}

/// Reads and parses a circuit file.
pub fn load_circuit(path: &str) -> Result<mstaq::Circuit, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })?;
    parse_circuit(&text).map_err(CliError::Parse)
}
