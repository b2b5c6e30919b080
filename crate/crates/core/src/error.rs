use thiserror::Error;

/// Errors surfaced by exact arithmetic and the certified root machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact division was requested but the division leaves a remainder.
    #[error("not divisible: exact division leaves a nonzero remainder")]
    NotDivisible,

    /// A root query was asked of the zero polynomial.
    #[error("zero polynomial has no well-defined root count")]
    ZeroPolynomial,

    /// The operation requires a square-free polynomial; deflate first.
    #[error("polynomial is not square-free")]
    NotSquareFree,

    /// Interlacing requires deg q = deg p + 1.
    #[error("degree mismatch: expected degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    /// Interval refinement did not settle within the configured depth.
    #[error("refinement budget exceeded")]
    RefinementBudgetExceeded,

    /// A certified root count disagrees with the count the theory guarantees.
    #[error("root count mismatch at {at}: expected {expected}, found {found}")]
    CountMismatch {
        expected: usize,
        found: usize,
        at: String,
    },

    /// Series reversion needs a unit linear coefficient.
    #[error("series is not invertible: linear coefficient is not a unit")]
    NonInvertibleSeries,

    /// An on-disk cache file failed its invariant validation.
    #[error("cache validation failed: {0}")]
    BadCache(String),

    /// A caller-supplied argument is outside the supported range.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
