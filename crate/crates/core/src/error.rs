use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error)]
pub enum Error {
    /// Shapes of matrices/vectors do not fit together.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An argument is outside the domain of the operation (not a face, not
    /// in the monoid, unit ideal, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("the cone over the generators contains a line; only pointed monoids are supported")]
    NotPointed,

    /// Raised by the checked pair constructor.
    #[error("({base}, {face}) is not a proper pair of the ideal")]
    NotProper { base: String, face: String },

    #[error("objects live in different ambient monoids")]
    AmbientMismatch,

    #[error("cover refinement did not reach a fixpoint within {0} iterations")]
    LoopCap(usize),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unsupported archive version {0:?}")]
    Version(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }
}
