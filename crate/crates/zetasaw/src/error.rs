use std::io;

use zetasaw_core::Error as CoreError;

/// Process exit status for a clean run.
pub const EXIT_OK: i32 = 0;
/// At least one verification check failed.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Bad command line or an argument outside an operation's domain.
pub const EXIT_USAGE: i32 = 2;
/// An iteration or root search did not converge.
pub const EXIT_NON_CONVERGENCE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(#[from] CoreError),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Numeric(e) => match e {
                CoreError::NonConvergence { .. }
                | CoreError::SeedFailure { .. }
                | CoreError::PrecisionExhausted { .. }
                | CoreError::NonFinite(_) => EXIT_NON_CONVERGENCE,
                _ => EXIT_USAGE,
            },
            CliError::Io(_) | CliError::Json(_) => EXIT_CHECK_FAILED,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
