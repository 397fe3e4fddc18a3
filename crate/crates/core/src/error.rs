use num_bigint::{BigInt, BigUint};
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid slope ({p},{q}): p and q must be coprime and not both zero")]
    InvalidSlope { p: u64, q: u64 },

    #[error("cannot parse word {0:?}: only the letters x and y are allowed")]
    ParseWord(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("{0} is not a Christoffel word")]
    NotChristoffel(String),

    #[error("{0} is not a proper Christoffel word (it has no standard factorization)")]
    ImproperWord(String),

    #[error("matrix has determinant {0}; an integer inverse needs determinant +1 or -1")]
    NotUnimodular(BigInt),

    #[error("({a}, {b}, {c}) is not a Markoff triple")]
    NotMarkoffTriple { a: BigUint, b: BigUint, c: BigUint },

    #[error("{0} is not a proper Markoff triple; {{1,1,1}} and {{1,1,2}} are the improper ones")]
    ImproperTriple(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Internal invariant failures are bugs (or misuse of an unchecked path),
    /// everything else is a rejected input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}
