//! Command-line workbench over `randic_core`: invariant reports, exhaustive
//! bound verification, enumeration, extremal search and named families.
//!
//! Exit codes are part of the interface: 0 for success, 1 when `verify`
//! finds a violation, 2 for usage or input errors.

use std::io;
use std::path::Path;

use thiserror::Error;

pub mod commands;
pub mod format;
pub mod verify;

pub use commands::{run, Cli, Command};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
}

impl CliError {
    pub fn io(path: &Path, source: io::Error) -> Self {
        CliError::Io { path: path.display().to_string(), source }
    }
}
