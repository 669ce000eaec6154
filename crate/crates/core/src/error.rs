use alloc::string::String;

/// Errors raised by the core library.
///
/// `Zero` outcomes of straightening are values, not errors; everything here
/// signals bad input, arithmetic overflow, or a failed internal consistency check.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("part at index {index} is negative ({value})")]
    NegativePart { index: usize, value: i64 },

    #[error("parts are not weakly decreasing at index {index} ({previous} < {value})")]
    NotDecreasing {
        index: usize,
        previous: i64,
        value: i64,
    },

    #[error("cannot parse {token:?}: {reason}")]
    Parse { token: String, reason: &'static str },

    #[error("integer overflow while {0}")]
    Overflow(&'static str),

    #[error("{name} must be at least {min}, got {value}")]
    OutOfRange {
        name: &'static str,
        min: i64,
        value: i64,
    },

    #[error("row exchange did not terminate within {cap} steps on {sequence}")]
    IterationCap { cap: u64, sequence: String },

    #[error("invalid raw term {term}: {reason}")]
    InvalidTerm { term: String, reason: &'static str },

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = core::result::Result<T, Error>;
