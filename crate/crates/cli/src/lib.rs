//! Batch front end for `hopf-galois`: file formats, commands and DOT output.

use std::path::PathBuf;

use thiserror::Error;

pub mod commands;
pub mod dot;
pub mod format;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {msg}", path.display())]
    Format { path: PathBuf, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] hopf_galois::Error),
}

impl CliError {
    /// 1 for a falsified mathematical property, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        use hopf_galois::Error as E;
        match self {
            CliError::Core(E::Falsified(_) | E::Invariant(_)) => 1,
            _ => 2,
        }
    }
}

impl From<hopf_galois::quotlat::InvalidReason> for CliError {
    fn from(e: hopf_galois::quotlat::InvalidReason) -> Self {
        CliError::Core(e.into())
    }
}
