//! Process-level error classification.
//!
//! Every failure maps onto one of three exit codes: 0 for success, 1 when a
//! mathematical check fails on otherwise valid input, and 2 for unusable
//! input, refused budgets, or IO trouble.

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    /// Invalid parameters, refused budgets, malformed files: exit 2.
    Usage(String),
    /// A verification or cross-check failed on valid input: exit 1.
    Check(String),
    /// Filesystem or serialization trouble: exit 2.
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Check(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Check(m) => write!(f, "check failed: {m}"),
            CliError::Io(m) => write!(f, "io: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

/// Wraps any displayable error as a usage failure (exit 2).
pub fn usage<E: fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

/// Wraps any displayable error as a failed check (exit 1).
pub fn check<E: fmt::Display>(e: E) -> CliError {
    CliError::Check(e.to_string())
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
