//! Error type shared by every numerical routine in the crate.

use std::fmt;

/// Errors from evaluation, root finding and quadrature.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    Domain(String),
    /// Series or quadrature failed to reach the requested tolerance.
    Convergence(String),
    /// A closed form was requested outside its stated applicability window.
    Applicability(String),
    /// Root bracketing failed (no sign change found).
    Bracketing(String),
    /// The field is too strong: the barrier maximum lies below the level energy.
    NoBarrier(String),
    /// The operation is not defined for this potential/parameter combination.
    Unsupported(String),
}

impl Error {
    /// Stable machine-readable category tag, used by the CLI error output.
    pub fn category(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Convergence(_) => "convergence",
            Error::Applicability(_) => "applicability",
            Error::Bracketing(_) => "bracketing",
            Error::NoBarrier(_) => "no-barrier",
            Error::Unsupported(_) => "unsupported",
        }
    }

    fn message(&self) -> &str {
        match self {
            Error::Domain(m)
            | Error::Convergence(m)
            | Error::Applicability(m)
            | Error::Bracketing(m)
            | Error::NoBarrier(m)
            | Error::Unsupported(m) => m,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.category(), self.message())
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
