use thiserror::Error;

use crate::report::Report;

/// Errors raised by constructions and checks.
///
/// Law violations are not errors: checks return a [`Report`]. An error means
/// the input could not be interpreted at all, a budget was exceeded, or a
/// construction's precondition was verified to fail.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    Structural(String),
    #[error("budget exceeded while building {what}: estimate {estimate} > cap {cap}")]
    Budget { what: String, estimate: u128, cap: usize },
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("{context}: {}", .report.summary())]
    Violated { context: String, report: Report },
    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("unsupported document version `{found}` (expected `{expected}`)")]
    Version { found: String, expected: String },
    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub(crate) fn mismatch(msg: impl Into<String>) -> Self {
        Error::Mismatch(msg.into())
    }

    pub(crate) fn violated(context: impl Into<String>, report: Report) -> Self {
        Error::Violated {
            context: context.into(),
            report,
        }
    }

    /// Exit code used by the command line driver.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Violated { .. } => 1,
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
