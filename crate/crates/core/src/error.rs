use thiserror::Error;

/// Broad category of a failure, used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Guard,
    Precondition,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex `{0}` does not appear in any facet")]
    UnusedVertex(String),
    #[error("size guard exceeded: {what} is {actual}, limit {limit}")]
    Guard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("the void complex has no faces")]
    VoidComplex,
    #[error("{0} is not a face")]
    NotAFace(String),
    #[error("colouring is not a partition of the vertex set: {0}")]
    NotAPartition(String),
    #[error("colouring is not proper: {0} and {1} lie in a common face")]
    NotProper(String, String),
    #[error("not nested: link({1}) ⊄ link({0})")]
    NotNested(String, String),
    #[error("face meets colour class {0} more than once")]
    FaceMeetsClassTwice(usize),
    #[error("variable lists differ")]
    VariableMismatch,
    #[error("generators are not all of the same degree")]
    NotEquigenerated,
    #[error("colourings have {0} and {1} classes")]
    ClassCountMismatch(usize, usize),
    #[error("degree sequence is not strictly increasing")]
    NotIncreasing,
    #[error("Boij-Söderberg peeling failed: {0}")]
    PeelFailed(String),
    #[error("{0}")]
    Precondition(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse(_)
            | Error::DuplicateLabel(_)
            | Error::UnknownVertex(_)
            | Error::UnusedVertex(_) => ErrorKind::Parse,
            Error::Guard { .. } => ErrorKind::Guard,
            _ => ErrorKind::Precondition,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
