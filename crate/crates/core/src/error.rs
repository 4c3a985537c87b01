use thiserror::Error;

/// Errors raised by the library.
///
/// `Invariant` marks conditions that can only fail through a bug in this crate;
/// every other variant is a caller-facing validation failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("unsupported size: {0}")]
    Unsupported(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields or rings")]
    Mismatch,
    #[error("zero has no multiplicative order")]
    ZeroOrder,
    #[error("degree {sub} does not divide degree {sup}")]
    NotSubfield { sub: usize, sup: usize },
    #[error("gcd({n}, {p}) != 1")]
    NotCoprimeToP { n: u64, p: u64 },
    #[error("moduli are not pairwise coprime")]
    NonCoprimeModuli,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("exponent {0} is even; only odd residues index roots of X^n+1")]
    EvenExponent(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("violated condition: {0}")]
    Violation(String),
    #[error("enumeration of {needed} elements exceeds the budget of {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("state space dimension {dim} exceeds the cap of {cap}")]
    CapExceeded { dim: String, cap: u64 },
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("factor is not part of this factor set")]
    UnknownFactor,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
