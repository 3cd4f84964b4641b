use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("cannot combine values from different monoids ({left} vs {right})")]
    MonoidMismatch { left: &'static str, right: &'static str },
    #[error("{0} is not a prime")]
    NotPrime(i64),
    #[error("{0} is not a squarefree integer different from 0 and 1")]
    NotSquarefree(i64),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("undefined operation: {0}")]
    Undefined(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("element {element} lies outside the domain {domain}")]
    OutsideDomain { element: String, domain: String },
    #[error("{0} is not a quadratic residue")]
    NotAResidue(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
