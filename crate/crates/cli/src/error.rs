use std::path::PathBuf;

/// Everything the front end can fail with, split by exit status.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    /// Malformed TOML or a value of the wrong shape; the message carries
    /// line and column.
    #[error("{0}")]
    Parse(String),
    /// Well-formed input that breaks a scenario invariant.
    #[error("{0}")]
    Validation(String),
    /// A computation refused its input.
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) | CliError::Validation(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
