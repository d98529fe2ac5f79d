use rm_infoset_oracle::OracleError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("no valid factorization of 2^{m} - 1 for order {rho}")]
    NoFactorization { m: u32, rho: u32 },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("{0}")]
    Usage(String),
    #[error("malformed golden table {table}: {reason}")]
    Golden { table: &'static str, reason: String },
    #[error("cannot start worker threads: {0}")]
    Threads(String),
    #[error(transparent)]
    Core(#[from] rm_infoset::Error),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

impl CliError {
    /// 2 when no usable factorization exists, 3 when a verification fails.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::NoFactorization { .. } => 2,
            CliError::Core(rm_infoset::Error::InvalidFactorization { .. }) => 2,
            CliError::VerificationFailed(_) => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
