use std::fmt;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live in rings with different variable counts.
    ContextMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// Division was requested by zero.
    DivisionByZero,
    /// Exact division left a remainder; upstream this usually signals a
    /// non-alternating numerator.
    NotDivisible,
    /// A substitution into negative exponents with a non-unit image.
    NonInvertibleSubstitution,
    /// The alternation group is larger than the configured budget.
    BudgetExceeded { required: u128, budget: u64 },
    /// A determinant larger than the supported size was requested.
    SizeExceeded { size: usize, max: usize },
    /// An index pair is outside the declared index set.
    InvalidIndex(String),
    /// The windowed basis does not span the given element.
    NotInSpan(String),
    /// A polynomial has negative exponents in a sector the ring forbids.
    SectorViolation(String),
    /// A sequence provider violates the boundary conventions.
    ConventionViolated(String),
    /// The canonical polynomial grammar was not matched.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ContextMismatch { left, right } => write!(
                f,
                "context mismatch: ({},{}) vs ({},{})",
                left.0, left.1, right.0, right.1
            ),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotDivisible => write!(f, "not exactly divisible"),
            Error::NonInvertibleSubstitution => {
                write!(f, "substitution into negative exponents requires a unit")
            }
            Error::BudgetExceeded { required, budget } => write!(
                f,
                "alternation group of size {} exceeds budget {}",
                required, budget
            ),
            Error::SizeExceeded { size, max } => {
                write!(f, "determinant size {} exceeds maximum {}", size, max)
            }
            Error::InvalidIndex(msg) => write!(f, "invalid index: {}", msg),
            Error::NotInSpan(msg) => write!(f, "not in span of windowed basis: {}", msg),
            Error::SectorViolation(msg) => write!(f, "sector violation: {}", msg),
            Error::ConventionViolated(msg) => write!(f, "convention violated: {}", msg),
            Error::Parse(msg) => write!(f, "parse error: {}", msg),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
