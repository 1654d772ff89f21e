use thiserror::Error;

/// Errors shared by every kernel in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Operand dimensions do not line up.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A dense/oracle path was asked for an instance above its size guard.
    #[error("size guard exceeded: {0}")]
    Size(String),

    /// An index is outside the valid range.
    #[error("index out of range: {0}")]
    Index(String),

    /// A frequency mask that cannot be applied to the requested map.
    #[error("invalid mask: {0}")]
    Mask(String),

    /// A configuration that the requested operation cannot honor.
    #[error("invalid config: {0}")]
    Config(String),

    /// Operation-count arithmetic overflowed the counter type.
    #[error("arithmetic overflow while counting {0}")]
    Overflow(&'static str),

    /// Analytic and instrumented counts disagree.
    #[error("counter contract violated: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }
}
