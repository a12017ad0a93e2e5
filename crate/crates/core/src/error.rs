//! Error and resource-budget types shared by every module.

use alloc::string::String;
use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong while building or computing with graded
/// objects. Resource exhaustion is a structured error, never a hang.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two variables in a ring share a name.
    DuplicateVariable(String),
    /// A grading weight was zero or negative.
    NonpositiveWeight,
    /// The modulus of a prime field is not prime.
    NonprimeModulus(u64),
    /// A parsed polynomial mentions a variable the ring does not have.
    UnknownVariable(String),
    /// Syntax error in the polynomial grammar.
    Parse(String),
    /// Two values from different rings were combined.
    RingMismatch,
    /// A homogeneous input was required.
    Inhomogeneous(String),
    /// A homological or graded index was outside its legal range.
    IndexOutOfRange(String),
    /// Division by zero in the coefficient field.
    DivisionByZero,
    /// A degree or pair-count budget was exhausted; the computation was
    /// aborted rather than left to run unbounded.
    BudgetExceeded(String),
    /// A graded map failed its degree bookkeeping checks.
    MalformedMap(String),
    /// The ideal is not of height 2 where the Hilbert-Burch pipeline
    /// requires it.
    NotHeightTwo { height: i64 },
    /// The ideal is not perfect (grade != projective dimension).
    NotPerfect { height: i64, pd: usize },
    /// `a` is not contained in `I` where containment is a precondition.
    NotContained(String),
    /// Parameters violate a stated precondition.
    Precondition(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DuplicateVariable(name) => write!(f, "duplicate variable name `{name}`"),
            Error::NonpositiveWeight => write!(f, "grading weights must be positive"),
            Error::NonprimeModulus(p) => write!(f, "{p} is not prime"),
            Error::UnknownVariable(name) => write!(f, "unknown variable `{name}`"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::RingMismatch => write!(f, "values belong to different rings"),
            Error::Inhomogeneous(what) => write!(f, "inhomogeneous input: {what}"),
            Error::IndexOutOfRange(what) => write!(f, "index out of range: {what}"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::BudgetExceeded(what) => write!(f, "budget exceeded: {what}"),
            Error::MalformedMap(msg) => write!(f, "malformed graded map: {msg}"),
            Error::NotHeightTwo { height } => {
                write!(f, "ideal has height {height}, expected height 2")
            }
            Error::NotPerfect { height, pd } => {
                write!(f, "ideal is not perfect: height {height} but pd {pd}")
            }
            Error::NotContained(msg) => write!(f, "containment failure: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

/// Degree and pair-count limits for Groebner-type computations.
///
/// Exceeding a limit aborts with [`Error::BudgetExceeded`]; partial results
/// are never silently returned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest total degree an S-polynomial may reach.
    pub max_degree: u32,
    /// Largest number of critical pairs processed in one basis computation.
    pub max_pairs: usize,
}

impl Budget {
    /// Generous default for desk-scale inputs.
    pub const DEFAULT: Budget = Budget {
        max_degree: 64,
        max_pairs: 200_000,
    };
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}
