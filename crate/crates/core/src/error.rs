//! Crate-wide error type.

use std::fmt;

/// Errors reported by the exact kernels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter violated a documented precondition. `requirement` names
    /// the inequality that failed, e.g. `"a <= m"`.
    Domain { requirement: &'static str },
    /// Exact division by a linear form failed: the dividend does not vanish
    /// under the substitution X = Y, so no exact quotient exists.
    NotDivisible,
    /// Gaussian elimination found a zero pivot column.
    Singular,
    /// A rational literal could not be parsed.
    Parse(String),
}

impl Error {
    pub(crate) fn domain(requirement: &'static str) -> Self {
        Error::Domain { requirement }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { requirement } => write!(f, "requires {requirement}"),
            Error::NotDivisible => write!(f, "series is not divisible by the linear form"),
            Error::Singular => write!(f, "matrix is singular"),
            Error::Parse(text) => write!(f, "cannot parse rational from {text:?}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
