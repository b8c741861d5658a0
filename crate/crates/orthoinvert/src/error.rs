//! Crate-wide error type.
//!
//! Exact arithmetic never silently continues past a pole: any ratio whose
//! denominator Pochhammer symbol vanishes is reported as `ZeroDenominator`
//! and the caller decides whether to skip, resample, or abort.

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A denominator Pochhammer symbol `(base)_len` evaluated to zero.
    #[error("zero denominator: ({base})_{len} vanishes")]
    ZeroDenominator { base: Rational, len: usize },

    /// Indices or family kind outside what the operation accepts.
    #[error("arity error: {0}")]
    Arity(String),

    /// A parameter violates a stated domain restriction.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed textual input (rational literals, system files).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn arity(msg: impl Into<String>) -> Self {
        Error::Arity(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    /// True for pole reports, which check runners may downgrade to a skip.
    pub fn is_pole(&self) -> bool {
        matches!(self, Error::ZeroDenominator { .. })
    }
}
