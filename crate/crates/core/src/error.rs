use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    BadExtensionDegree,
    #[error("field too large: q = {0} exceeds the 2^20 guard")]
    FieldTooLarge(u64),
    #[error("modulus must be monic of degree {expected}, got degree {got}")]
    ModulusDegree { expected: u32, got: usize },
    #[error("modulus is reducible over the base prime field")]
    ReducibleModulus,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("operation undefined for the zero element")]
    ZeroElement,
    #[error("element code {code} out of range for a field of {q} elements")]
    ElementRange { code: u64, q: u64 },
    #[error("degree {0} is not supported here (d must be >= 2)")]
    DegreeTooSmall(u64),
    #[error("d = {0} is divisible by 4; stability analysis rejects this case")]
    DegreeDivisibleByFour(u64),
    #[error("iterate degree {degree} exceeds the cap {cap}")]
    DegreeCapExceeded { degree: u128, cap: usize },
    #[error("exhaustive root search is guarded to q <= 2^20 (q = {0})")]
    RootSearchGuard(u64),
    #[error("subfield of size {0} is not identifiable inside this field")]
    NoSuchSubfield(u64),
    #[error("m = {0} out of range (2..=20)")]
    MersenneRange(u32),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
