use thiserror::Error;

/// CLI failures, each tied to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, unreadable or malformed input.
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(mdclique::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    /// A found set failed re-verification.
    #[error("self-check failed: {0}")]
    SelfCheck(String),

    /// Counters disagreed during verify or bench.
    #[error("verification failed: {0}")]
    Disagreement(String),
}

impl From<mdclique::Error> for CliError {
    fn from(e: mdclique::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_guard() => 3,
            CliError::SelfCheck(_) => 4,
            CliError::Disagreement(_) => 5,
            _ => 2,
        }
    }
}
