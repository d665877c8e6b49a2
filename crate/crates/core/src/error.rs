use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("undeclared argument `{name}` at {line}:{column}")]
    UndeclaredArgument {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("missing `#` separator between nodes and edges")]
    MissingSeparator,
    #[error("invalid argument name `{0}`")]
    InvalidArgumentName(String),
    #[error("unknown argument `{0}`")]
    UnknownArgument(String),
    #[error("atom `{0}` is not in the signature")]
    AtomOutsideSignature(String),
    #[error("a clause needs at least one head atom or body literal")]
    EmptyClause,
    #[error("clause `{0}` is not a general clause")]
    NotGeneral(String),
    #[error("atom map: {0}")]
    AtomMap(String),
    #[error("{what} has size {size}, exceeding the exhaustive bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },
}

impl Error {
    /// True for errors caused by resource bounds rather than bad input.
    pub fn is_bound(&self) -> bool {
        matches!(self, Error::BoundExceeded { .. })
    }
}
