use std::error;
use std::fmt;

/// Errors reported by the kernel.
///
/// Every fallible operation in this crate returns [`Result`]; none of the
/// public entry points panic on bad input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The requested modulus is not an odd prime in the supported range
    /// `2 < p < 2^31`.
    CompositeModulus(u64),
    /// Arithmetic attempted between elements of fields with different moduli.
    ModulusMismatch { left: u64, right: u64 },
    /// Multiplicative inverse of zero.
    DivisionByZero,
    /// Exponent vectors of different lengths were combined.
    ArityMismatch { left: usize, right: usize },
    /// Polynomials from different rings (field, arity or term order differ)
    /// were combined.
    RingMismatch,
    /// A zero polynomial appeared where a nonzero one is required
    /// (leading-term queries).
    ZeroPolynomial,
    /// A zero polynomial appeared in a divisor or generator list.
    ZeroDivisorPolynomial,
    /// A generator list contains the same polynomial twice.
    DuplicatePolynomial,
    /// An operation that needs at least one element received an empty list.
    EmptyInput,
    /// The input list is not a Gröbner basis for its declared order.
    NotAGroebnerBasis,
    /// The input basis is not reduced (non-monic, or some support term is
    /// divisible by another leading term).
    NotReduced,
    /// The ideal is not zero-dimensional, so the staircase is infinite.
    NotZeroDimensional,
    /// The ideal is the whole ring (contains a nonzero constant).
    UnitIdeal,
    /// No pivot is available for a transition-matrix update; the vector was
    /// already dependent on the tracked ones.
    NoPivot,
    /// Exhaustive root finding is only supported for moduli below `2^20`.
    ModulusTooLargeForSolve(u64),
    /// An undeclared variable was used in a polynomial expression.
    UnknownVariable { name: String, line: usize, col: usize },
    /// Any other syntax problem in a system file or polynomial expression.
    Parse { msg: String, line: usize, col: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CompositeModulus(p) => {
                write!(f, "modulus {p} is not an odd prime below 2^31")
            }
            Error::ModulusMismatch { left, right } => {
                write!(f, "mixed moduli {left} and {right}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ArityMismatch { left, right } => {
                write!(f, "exponent vectors of lengths {left} and {right}")
            }
            Error::RingMismatch => write!(f, "polynomials belong to different rings"),
            Error::ZeroPolynomial => write!(f, "zero polynomial has no leading term"),
            Error::ZeroDivisorPolynomial => {
                write!(f, "zero polynomial not allowed in this list")
            }
            Error::DuplicatePolynomial => write!(f, "duplicate polynomial in input list"),
            Error::EmptyInput => write!(f, "empty input"),
            Error::NotAGroebnerBasis => {
                write!(f, "input is not a Gröbner basis for its term order")
            }
            Error::NotReduced => write!(f, "input basis is not reduced"),
            Error::NotZeroDimensional => write!(f, "ideal is not zero-dimensional"),
            Error::UnitIdeal => write!(f, "ideal is the unit ideal"),
            Error::NoPivot => write!(f, "no pivot available: vector already dependent"),
            Error::ModulusTooLargeForSolve(p) => {
                write!(f, "root scan needs p < 2^20, got {p}")
            }
            Error::UnknownVariable { name, line, col } => {
                write!(f, "line {line}, column {col}: unknown variable `{name}`")
            }
            Error::Parse { msg, line, col } => {
                write!(f, "line {line}, column {col}: {msg}")
            }
        }
    }
}

impl error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
