use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the arguments was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A structural guarantee the implementation relies on failed to hold.
    /// Raised instead of silently producing wrong output.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// An explicit resource cap (path count, S-pair count, enumeration size)
    /// was exceeded.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// A modular evaluation hit a denominator divisible by the prime; the
    /// caller should retry with a different prime.
    #[error("denominator divisible by prime {prime}; retry with a new prime")]
    RetryWithNewPrime { prime: u64 },

    /// A graph or matrix file failed to parse.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        Error::ContractViolation(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }

    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
