use thiserror::Error;

/// Engine-wide error type. Every public operation that can fail returns this.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("monomial length mismatch: {0} vs {1}")]
    MonomialLength(usize, usize),
    #[error("S-pair budget of {0} exhausted; raise the cap to continue")]
    ResourceExhausted(usize),
    #[error("the unit ideal is not a prime candidate")]
    UnitIdeal,
    #[error("map is not well defined: column {0} of the source presentation is not carried into the target")]
    IllFormedMap(usize),
    #[error("squares do not commute at degree {0}")]
    NonCommutingSquare(i64),
    #[error("d \u{2218} d \u{2260} 0 at degree {0}")]
    DifferentialSquare(i64),
    #[error("complex object at degree {0} is not free")]
    NotFree(i64),
    #[error("filtration is not decreasing: step {0} does not contain step {1}")]
    NotDecreasing(i64, i64),
    #[error("inconsistent coaisle evidence: {0}")]
    InconsistentEvidence(String),
    #[error("undetermined beyond window: no nonvanishing degree found up to {0} and the resolution was truncated")]
    UndeterminedBeyondWindow(i64),
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("{0}")]
    Parse(String),
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;
