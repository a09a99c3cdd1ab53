//! CLI error type carrying the exit-code contract:
//! 1 = unusable input (bad flags, unreadable or malformed files, unknown
//!     table ids, unwritable output),
//! 2 = structurally valid input describing something outside the math
//!     domain,
//! 3 = a reference table failed to reproduce.

use std::fmt;

use bigcot_core::DomainError;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(DomainError),
    TableMismatch { table: &'static str, cells: usize },
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Domain(_) => 2,
            CliError::TableMismatch { .. } => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::TableMismatch { table, cells } => {
                write!(f, "table {table} failed to reproduce: {cells} cell(s) differ")
            }
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<DomainError> for CliError {
    fn from(e: DomainError) -> Self {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}
