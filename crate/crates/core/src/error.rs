use thiserror::Error;

/// Errors raised by the algebraic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid degree: {0} (the generation degree must be at least 2)")]
    InvalidDegree(usize),

    #[error("parameter ideal: at least one interior exponent is required")]
    ParameterIdeal,

    #[error("exponent out of range: {exponent} is not in 1..={max}")]
    ExponentOutOfRange { exponent: usize, max: usize },

    #[error("exponents not strictly increasing: {prev} is followed by {next}")]
    NotIncreasing { prev: usize, next: usize },

    #[error("index out of range: {index} exceeds table bound {bound}")]
    OutOfRange { index: usize, bound: usize },

    #[error("cap exceeded: no {what} found for n <= {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("resource limit: {what} needs extent {extent}, ceiling is {ceiling}")]
    ResourceLimit {
        what: &'static str,
        extent: usize,
        ceiling: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
