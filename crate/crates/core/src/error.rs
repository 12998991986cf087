use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("{what} of size {size} exceeds the configured limit {limit}")]
    SizeExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("division by zero")]
    DivisionByZero,

    #[error("element value {value} does not belong to a field of order {order}")]
    FieldMismatch { value: u64, order: u64 },

    #[error("gcd({n}, {q}) != 1")]
    NotCoprime { n: u64, q: u64 },

    #[error("{n} does not divide {order}")]
    NotDivisor { n: u64, order: u64 },

    #[error("invalid modulus {0}: must be at least 2")]
    InvalidModulus(u64),

    #[error("defining range has length {range} but the coset index has length {index}")]
    LengthMismatch { range: u64, index: u64 },

    #[error("argument outside the stated range: {0}")]
    RangeViolation(String),

    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("configuration error: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::RangeViolation(msg.into())
    }

    pub(crate) fn params(msg: impl Into<String>) -> Self {
        Error::InvalidParams(msg.into())
    }
}
