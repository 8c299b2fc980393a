use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph: {0}")]
    Graph(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("unknown concept `{0}`")]
    UnknownConcept(String),
    #[error("malformed drawing: {0}")]
    Drawing(String),
    #[error("general position violated ({kind}): {detail}")]
    GeneralPosition { kind: &'static str, detail: String },
    #[error("edge {0} is not attributable to a connection")]
    Unattributed(String),
    #[error("path {0} is not a pole path of the connection")]
    NotAPolePath(usize),
    #[error("coverage enumeration exceeded the budget of {0} search nodes")]
    BudgetExceeded(u64),
    #[error("format: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
