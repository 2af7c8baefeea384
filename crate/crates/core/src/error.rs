use thiserror::Error;

/// Failure to parse an element, monomial, or table from text.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
#[error("{message}")]
pub struct ParseError {
    message: String,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
        }
    }

    /// Prefix the message with a 1-based line number (table parsing).
    pub fn at_line(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            message: format!("line {line}: {}", message.into()),
        }
    }
}

/// A computation exceeded its configured budget. Carries how far it got so
/// partial results can still be reported.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
#[error("resource budget exceeded during {stage} (last completed s={last_s}, t={last_t})")]
pub struct ResourceLimit {
    pub stage: &'static str,
    pub last_s: u32,
    pub last_t: u32,
}

/// Invalid argument to one of the closed-form group computations.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ImjError {
    #[error("stem must be >= 1, got {0}")]
    BadStem(i64),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// A stems-table consistency check failed.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
#[error("{message}")]
pub struct ValidationError {
    message: String,
}

impl ValidationError {
    pub fn new(message: impl Into<String>) -> Self {
        ValidationError {
            message: message.into(),
        }
    }
}
