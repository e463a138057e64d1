use thiserror::Error;

/// Errors shared across the workbench.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Two values that must live over the same complex do not.
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),

    /// An index, arity or size precondition failed.
    #[error("argument error: {0}")]
    Argument(String),

    /// A computation needs monomials beyond the configured polynomial-degree
    /// cap. Never silently truncated; the message says what would suffice.
    #[error("degree cap overflow: {context} (needs cap >= {needed})")]
    CapOverflow { context: String, needed: i64 },

    /// A document or presentation failed structural validation.
    #[error("invalid presentation: {0}")]
    Presentation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub fn carrier(msg: impl Into<String>) -> Self {
        Error::CarrierMismatch(msg.into())
    }

    pub fn cap(context: impl Into<String>, needed: i64) -> Self {
        Error::CapOverflow { context: context.into(), needed }
    }
}
