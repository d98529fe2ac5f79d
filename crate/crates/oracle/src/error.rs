use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("extension degree {0} is outside 2..=16")]
    DegreeOutOfRange(u32),
    #[error("polynomial {poly:#b} is not a primitive polynomial of degree {m}")]
    NotPrimitive { m: u32, poly: u32 },
    #[error("position {position} is outside 0..{len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("position {0} is listed twice")]
    DuplicatePosition(usize),
    #[error("defining set is invalid: {0}")]
    InvalidDefiningSet(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("order {rho} is outside 0..{m}")]
    OrderOutOfRange { rho: u32, m: u32 },
    #[error("cannot parse matrix: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, OracleError>;
