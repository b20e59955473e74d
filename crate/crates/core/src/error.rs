use thiserror::Error;

/// Errors raised by the evaluation and analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    /// The closed-form denominator vanishes at the requested point; the caller
    /// should switch to the hat/derivative (L'Hospital) evaluation path.
    #[error("vanishing denominator: {0}")]
    VanishingDenominator(String),

    #[error("torus knot parameters ({p}, {q}) are invalid: {reason}")]
    InvalidTorusKnot { p: i64, q: i64, reason: &'static str },

    #[error("cyclotomic field mismatch: conductor {left} vs {right}")]
    FieldMismatch { left: u64, right: u64 },

    #[error("least-squares design is rank deficient")]
    RankDeficient,

    #[error("{0}")]
    Refused(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
