use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent diagram text. `line` is 1-based when known.
    #[error("{}{msg}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Parse { line: Option<usize>, msg: String },

    #[error("diagram has {crossings} crossings, above the cap of {cap}")]
    CapExceeded { crossings: usize, cap: usize },

    /// A rewrite left a component that is neither in normal form nor matched by
    /// any relation. Indicates a bookkeeping bug in the bridge operator.
    #[error("unreachable surface shape: {0}")]
    UnreachableShape(String),

    #[error("d^2 != 0 at grading {grading}, generator {generator}")]
    DSquaredNonzero { grading: String, generator: String },

    #[error("differential term left its expected grading: {0}")]
    Degree(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: impl Into<Option<usize>>, msg: impl Into<String>) -> Self {
        Error::Parse {
            line: line.into(),
            msg: msg.into(),
        }
    }
}
