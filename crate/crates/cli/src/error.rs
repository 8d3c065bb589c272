use toeplitz_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0} claim(s) failed")]
    ClaimsFailed(usize),
}

impl CliError {
    /// 1 claim failure, 2 usage or parse error, 3 resource cap.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::ClaimsFailed(_) => 1,
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Core(e) => match e {
                Error::TooManyVertices(_)
                | Error::Disconnected(..)
                | Error::CapExceeded { .. }
                | Error::BudgetExhausted => 3,
                _ => 2,
            },
        }
    }
}
