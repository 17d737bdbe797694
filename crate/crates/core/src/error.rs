use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A caller-supplied parameter is outside the operation's domain.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// A documented precondition of a theorem-backed operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The requested work exceeds a configured exhaustive-search cap.
    #[error("resource cap exceeded: {what} needs {requested}, cap is {limit}{}", detail.as_deref().map(|d| format!(" ({d})")).unwrap_or_default())]
    ResourceGuard {
        what: &'static str,
        requested: usize,
        limit: usize,
        detail: Option<String>,
    },

    /// Malformed `.2col` text.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Malformed graph6 text.
    #[error("graph6: {0}")]
    Graph6(String),

    /// A checker found an input contradicting the statement it verifies.
    #[error("counterexample: {0}")]
    Counterexample(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
