use thiserror::Error;

/// Errors raised by the coset, defining-set and Reed-Muller machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} must be odd")]
    EvenModulus(u64),
    #[error("modulus {0} is out of range (must be positive and below 2^32)")]
    ModulusOutOfRange(u64),
    #[error("the multiplicative order of 2 is undefined modulo {0}")]
    OrderUndefined(u64),
    #[error("residue {residue} is not reduced modulo {modulus}")]
    ResidueOutOfRange { residue: u64, modulus: u64 },
    #[error("moduli {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("{delta} is not a unit modulo {modulus}")]
    NotAUnit { delta: u64, modulus: u64 },
    #[error("gamma must be at least 1")]
    ZeroGamma,
    #[error("modulus mismatch: expected {expected}, found {found}")]
    ModulusMismatch { expected: u64, found: u64 },
    #[error("set is not closed under multiplication by 2: {0} has its double missing")]
    NotClosed(String),
    #[error("orbits overlap at {0}")]
    OverlappingOrbits(String),
    #[error("invalid representatives: {0}")]
    InvalidRepresentatives(String),
    #[error("first coordinate {0} does not occur among the representatives")]
    MissingFirstCoordinate(u64),
    #[error("M(u) is not an integer for u = {u}: {numerator} / {denominator}")]
    InexactDivision {
        u: u64,
        numerator: u64,
        denominator: u64,
    },
    #[error("invalid check-position region: {0}")]
    InvalidRegion(String),
    #[error("invalid Reed-Muller parameters: {0}")]
    InvalidCode(String),
    #[error("invalid factorization of 2^{m} - 1: {reason}")]
    InvalidFactorization { m: u32, reason: String },
    #[error("{value} does not have 2-weight {weight}")]
    WrongWeight { value: u64, weight: u32 },
    #[error("closed-form information sets exist only for orders 1 and 2 (got {0}); use the generic cyclic path")]
    UnsupportedOrder(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
