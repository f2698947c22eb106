use thiserror::Error;

use crate::exact::ExactInt;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("crossing number {c} out of range: need c >= {min}")]
    CrossingNumber { c: i64, min: i64 },

    #[error("crossing number {0} must be even")]
    OddCrossingNumber(i64),

    #[error("signature {0} is odd; signatures are always even")]
    OddSignature(i64),

    #[error("expected the row for c = {expected}, got c = {found}")]
    RowMismatch { expected: i64, found: i64 },

    #[error("methods disagree at c = {c}, sigma = {sigma}: recurrence {recursive}, closed form {closed}")]
    Integrity { c: i64, sigma: i64, recursive: ExactInt, closed: ExactInt },

    #[error("signature row for c = {0} is empty")]
    EmptyRow(i64),

    #[error("non-finite argument {0}")]
    NonFinite(f64),

    #[error("invalid range: {0}")]
    Range(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_c(c: i64, min: i64) -> Result<()> {
    if c < min {
        Err(Error::CrossingNumber { c, min })
    } else {
        Ok(())
    }
}
