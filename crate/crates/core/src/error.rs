use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order relation has a cycle through {0} and {1}")]
    Cycle(usize, usize),
    #[error("element {0} is forced to be inconsistent with itself")]
    SelfInconsistent(usize),
    #[error("label {label} out of range for {n} elements")]
    Index { label: usize, n: usize },
    #[error("{what} has size {size}, over the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid cubical complex: {0}")]
    Validation(String),
    #[error("invalid colouring: {0}")]
    InvalidColoring(String),
    #[error("{0} is not a face")]
    NotAFace(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Report(String),
}
