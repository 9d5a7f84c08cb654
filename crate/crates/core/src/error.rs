use thiserror::Error;

use crate::field::Field;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },

    #[error("division by zero")]
    DivisionByZero,

    #[error("polynomials belong to different rings")]
    RingMismatch,

    #[error("monomial has {found} exponents, ring has {expected} variables")]
    ArityMismatch { expected: usize, found: usize },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("divisor {0} is the zero polynomial")]
    ZeroDivisor(usize),

    #[error("input contains no nonzero polynomial")]
    EmptyInput,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),

    #[error("invalid pair strategy: {0}")]
    InvalidStrategy(String),

    #[error("explicit schedule exhausted after {0} picks")]
    ScheduleExhausted(usize),

    #[error("schedule pick ({0},{1}) is not a pending pair")]
    InvalidSchedulePick(usize, usize),

    #[error("pair limit of {0} processed pairs exceeded")]
    PairLimit(usize),

    #[error(
        "cofactor row {row} has {len} entries but only {available} reference polynomials exist"
    )]
    RowTooLong {
        row: usize,
        len: usize,
        available: usize,
    },

    #[error("input is not a Groebner basis with respect to {0}")]
    NotGroebner(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
