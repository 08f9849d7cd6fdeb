use std::path::PathBuf;
use std::process::ExitCode;

use thiserror::Error;

use crate::format::num;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable, malformed or out-of-range input.
    #[error("{0}")]
    Input(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("invariant `{name}` violated: residual {} exceeds tolerance {}", num(*residual), num(*tolerance))]
    Invariant {
        name: String,
        residual: f64,
        tolerance: f64,
    },
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Input(_) | CliError::Io { .. } => ExitCode::from(2),
            CliError::Invariant { .. } => ExitCode::from(3),
        }
    }

    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }
}

impl From<ccnr_core::Error> for CliError {
    fn from(e: ccnr_core::Error) -> Self {
        use ccnr_core::Error as E;
        match e {
            E::Shape(_) | E::Domain(_) => CliError::Input(e.to_string()),
            E::Symmetry {
                residual,
                tolerance,
            } => CliError::Invariant {
                name: "hermitian".into(),
                residual,
                tolerance,
            },
            E::Invariant {
                name,
                residual,
                tolerance,
            } => CliError::Invariant {
                name: name.into(),
                residual,
                tolerance,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
