use thiserror::Error;

/// Failure classes shared by every module. The CLI maps each class to an
/// exit code.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Malformed input: bad indices, inconsistent sizes, failed audits.
    #[error("structural error: {0}")]
    Structural(String),
    /// A caller broke an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),
    /// The request is valid but exceeds what the implementation supports.
    #[error("capability error: {0}")]
    Capability(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("numeric breakdown: {0}")]
    Numeric(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
