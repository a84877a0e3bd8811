use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error(
        "ordering violated: expected lower <= modal <= upper, got ({lower}, {modal}, {upper})"
    )]
    OrderingViolation { lower: f64, modal: f64, upper: f64 },

    #[error("non-finite value in fuzzy number")]
    NonFinite,

    #[error("alpha {0} is outside [0, 1]")]
    AlphaOutOfRange(f64),

    #[error("{name} = {value} is outside [0, 1]")]
    Range { name: &'static str, value: f64 },

    #[error("malformed linear program: {0}")]
    MalformedLp(String),

    #[error("simplex exceeded {0} iterations")]
    NumericalBreakdown(usize),

    #[error("solver failure for DMU {dmu}: {reason}")]
    SolverFailure { dmu: usize, reason: String },

    #[error("best-case score z* = {0} is not positive")]
    DegenerateZStar(f64),

    #[error("data error: {0}")]
    Data(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("value error at {location}: {reason}")]
    Value { location: String, reason: String },

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// True for failures of the optimization layer, as opposed to bad input.
    pub fn is_solver(&self) -> bool {
        matches!(
            self,
            Error::NumericalBreakdown(_) | Error::SolverFailure { .. } | Error::DegenerateZStar(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
