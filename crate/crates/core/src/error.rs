use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed tree: {0}")]
    MalformedTree(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// An enumeration or construction would exceed its configured size bound.
    #[error("resource cap exceeded: {what} needs {count} items, cap is {cap}")]
    ResourceCap {
        what: String,
        count: usize,
        cap: usize,
    },

    /// A proposed homomorphism sends a relator of its domain to a nonzero element.
    #[error("relator {index} of the domain maps to a nonzero element {residue:?}")]
    RelatorViolation { index: usize, residue: Vec<String> },

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Signals a bug: a situation that valid input can never produce.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
