use std::path::{Path, PathBuf};

use thiserror::Error;
use twoclub_core::ClubError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}{message}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Parse { line: Option<usize>, message: String },

    #[error("{path}: {inner}")]
    InFile { path: PathBuf, inner: Box<CliError> },

    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Club(#[from] ClubError),
}

impl CliError {
    pub fn parse(line: usize, message: impl Into<String>) -> CliError {
        CliError::Parse { line: Some(line), message: message.into() }
    }

    pub fn in_file(self, path: &Path) -> CliError {
        match self {
            CliError::Parse { .. } => CliError::InFile { path: path.to_path_buf(), inner: Box::new(self) },
            other => other,
        }
    }

    /// 1 for a failed verification, 3 for an exceeded budget, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::InFile { inner, .. } => inner.exit_code(),
            CliError::Club(ClubError::Budget(_)) => 3,
            CliError::Club(ClubError::Verification(_)) => 1,
            _ => 2,
        }
    }
}
