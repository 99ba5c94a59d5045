//! Error type shared across the crate.

use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The modulus passed to `PrimeField::new` is not a prime number.
    NotPrime(u64),
    /// Two values from different rings were combined.
    RingMismatch,
    /// A computation exceeded the ring's configured degree cap.
    DegreeOverflow { cap: u32, reached: u64 },
    /// Invalid ring construction (duplicate/empty variable names, bad weights).
    InvalidRing(String),
    /// Text input could not be parsed. Positions are 1-based.
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    /// A premultiplier whose trace is not 1 was used where a splitting is required.
    NotASplitting { trace: String },
    /// A splitting/ideal pair that must be compatible is not.
    NotCompatible { ideal: String, witness: String },
    /// A seed handed to lattice enumeration fails the compatibility check.
    IncompatibleSeed { ideal: String, witness: String },
    /// An operation that requires a graded ideal received a non-graded one.
    NotGraded(String),
    /// An operation restricted to monomial ideals received a general one.
    NonMonomial(String),
    /// Ring arity exceeds the combinatorial guard of an exhaustive enumeration.
    ArityTooLarge { arity: usize, max: usize },
    /// Hilbert-polynomial interpolation failed to stabilize; retry with a larger window.
    WindowTooSmall { window: i64 },
    /// An element handed to the rigidity system does not lie in the ideal.
    NotInIdeal(String),
    /// Ideal rejected by an operation's precondition (zero, unit, ...).
    InvalidIdeal(String),
    /// Command-level misuse (missing declarations, unknown names).
    Usage(String),
    /// I/O failure in the CLI layer.
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{} is not prime", p),
            Error::RingMismatch => write!(f, "operands belong to different rings"),
            Error::DegreeOverflow { cap, reached } => {
                write!(f, "degree {} exceeds the configured cap {}", reached, cap)
            }
            Error::InvalidRing(msg) => write!(f, "invalid ring: {}", msg),
            Error::Parse { line, col, msg } => {
                write!(f, "parse error at {}:{}: {}", line, col, msg)
            }
            Error::NotASplitting { trace } => {
                write!(f, "premultiplier is not a splitting: Tr(g) = {}", trace)
            }
            Error::NotCompatible { ideal, witness } => {
                write!(f, "ideal ({}) is not compatibly split; witness: {}", ideal, witness)
            }
            Error::IncompatibleSeed { ideal, witness } => {
                write!(f, "seed not compatible: ({}); witness: {}", ideal, witness)
            }
            Error::NotGraded(what) => write!(f, "non-graded input: {}", what),
            Error::NonMonomial(what) => write!(f, "non-monomial input: {}", what),
            Error::ArityTooLarge { arity, max } => {
                write!(f, "ring has {} variables; exhaustive enumeration is capped at {}", arity, max)
            }
            Error::WindowTooSmall { window } => {
                write!(f, "window too small: interpolation from degree {} did not stabilize", window)
            }
            Error::NotInIdeal(what) => write!(f, "element {} does not lie in the ideal", what),
            Error::InvalidIdeal(msg) => write!(f, "invalid ideal: {}", msg),
            Error::Usage(msg) => write!(f, "{}", msg),
            Error::Io(msg) => write!(f, "io error: {}", msg),
        }
    }
}

impl std::error::Error for Error {}

impl Error {
    /// Exit code the CLI maps this error to: 1 for a mathematical
    /// refutation, 2 for usage/parse problems.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotASplitting { .. }
            | Error::NotCompatible { .. }
            | Error::IncompatibleSeed { .. } => 1,
            _ => 2,
        }
    }
}
