//! Command-line front end: knot analysis, space-form certificates, orbit
//! geometry and corpus runs.

pub mod cache;
pub mod commands;
pub mod config;
pub mod output;

pub use cache::{cache_key, ResultCache, ALGORITHM_VERSION};
pub use commands::{run, Cli};
pub use config::{OutputFormat, RunConfig, CONFIG_ENV};
pub use output::SCHEMA;

use thiserror::Error;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Exit {
    Success = 0,
    /// Bad input, parameters or configuration.
    InputError = 1,
    /// A report contradicts the branched-cover dichotomy.
    Violation = 2,
    /// A verification check or oracle comparison failed.
    CheckFailed = 3,
    /// Some corpus rows could not be analyzed.
    RowErrors = 4,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config: {0}")]
    Config(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error("input: {0}")]
    Input(String),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit(&self) -> Exit {
        match self {
            CliError::Config(_) | CliError::Input(_) => Exit::InputError,
            CliError::Cache(_) | CliError::Io(_) => Exit::InputError,
        }
    }
}
