use thiserror::Error;

/// Errors raised by the exact-arithmetic routines in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("(0, 0) is not a slope")]
    ZeroSlope,
    #[error("cannot parse slope {0:?}; expected \"p/q\", an integer, or \"inf\"")]
    SlopeSyntax(String),
    #[error("modulus must be positive, got {0}")]
    NonPositiveModulus(i64),
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: i64, b: i64 },
    #[error("framing matrix undefined: component {0} has framing inf")]
    InfiniteFraming(usize),
    #[error("linking data is not symmetric at ({0}, {1})")]
    AsymmetricLinking(usize, usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("polynomial is not normalized: a0 + 2*sum(ai) = {0}, expected 1")]
    NotNormalized(i64),
    #[error("invalid Seifert matrix: {0}")]
    InvalidSeifert(String),
    #[error("invalid gap sequence: {0}")]
    InvalidGaps(String),
    #[error("parameter out of range: {0}")]
    Constraint(String),
    #[error("unknown table entry {0:?}")]
    UnknownEntry(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
