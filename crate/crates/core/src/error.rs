use thiserror::Error;

/// Errors raised anywhere in the enumeration, classification and algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("resource cap exceeded: n = {requested} is above the configured limit {cap}")]
    ResourceCap { requested: usize, cap: usize },

    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    /// A structural property the decomposition relies on did not hold.
    #[error("structural assumption violated: {0}")]
    Structural(String),

    /// Two routes that must agree did not.
    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
