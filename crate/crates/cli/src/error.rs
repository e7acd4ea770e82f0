//! Error classes mapped to exit codes: input problems (malformed flags,
//! unreadable/unwritable files) exit 2, domain problems (a computation asked
//! outside its mathematical or data range) exit 3.

use thiserror::Error;
use zetalab_core::dynamics::DynamicsError;
use zetalab_core::number_theory::TableError;
use zetalab_core::operator::OperatorError;
use zetalab_core::stats::StatsError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Domain(_) => 3,
        }
    }

    pub fn input(message: impl Into<String>) -> Self {
        CliError::Input(message.into())
    }
}

impl From<DynamicsError> for CliError {
    fn from(e: DynamicsError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<OperatorError> for CliError {
    fn from(e: OperatorError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<StatsError> for CliError {
    fn from(e: StatsError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<TableError> for CliError {
    fn from(e: TableError) -> Self {
        match e {
            // problems with the request or the file itself
            TableError::Io { .. }
            | TableError::Parse { .. }
            | TableError::NonPositive { .. }
            | TableError::NotAscending { .. }
            | TableError::Empty => CliError::Input(e.to_string()),
            // the data cannot answer the question asked
            TableError::OutOfRange { .. }
            | TableError::InsufficientZeros { .. }
            | TableError::ArgumentTooSmall(_) => CliError::Domain(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
