use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parameters or inputs outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("coloring parse error on line {line}: {message}")]
    ColoringFormat { line: usize, message: String },

    /// An internal consistency check failed; this is a bug, not bad input.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
