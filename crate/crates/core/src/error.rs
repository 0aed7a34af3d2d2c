use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("rational function has a pole at q = 1")]
    PoleAtOne,
    #[error("denominator of the exact sum is divisible by {p}")]
    NotPIntegral { p: u64 },
    #[error("malformed serialization: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
