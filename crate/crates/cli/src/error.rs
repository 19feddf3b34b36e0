use std::path::PathBuf;

use mdvrp_core::Error as CoreError;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INVALID_INPUT: i32 = 2;
    pub const INFEASIBLE: i32 = 3;
    pub const CERTIFICATE: i32 = 4;
    pub const BUDGET: i32 = 5;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("instance schema: {0}")]
    Schema(String),
    #[error("invalid json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => core_exit_code(e),
            _ => exit::INVALID_INPUT,
        }
    }

    /// Short machine-readable tag for failure records.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Read { .. } | CliError::Write { .. } => "io",
            CliError::Schema(_) | CliError::Json(_) => "schema",
            CliError::Core(e) => match core_exit_code(e) {
                exit::INFEASIBLE => "infeasible",
                exit::BUDGET => "budget",
                _ => "invalid_input",
            },
            CliError::Usage(_) => "usage",
        }
    }
}

pub fn core_exit_code(e: &CoreError) -> i32 {
    match e {
        CoreError::Infeasible { .. } => exit::INFEASIBLE,
        CoreError::BudgetExceeded { .. } => exit::BUDGET,
        _ => exit::INVALID_INPUT,
    }
}
