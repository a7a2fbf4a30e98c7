use thiserror::Error;

/// Errors reported by the analysis engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid chain complex: {0}")]
    InvalidComplex(String),
    #[error("{op} requires an augmented chain complex")]
    NotAugmented { op: &'static str },
    #[error("{op} requires a nonempty pointed complex")]
    NoBasepoint { op: &'static str },
    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),
    #[error("undeclared vertex label `{0}`")]
    UndeclaredVertex(String),
    #[error("vertex `{0}` is not in the complex")]
    MissingVertex(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("invalid cycle notation: {0}")]
    BadCycles(String),
    #[error("permutation degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("assignment must cover all {expected} generators, got {got}")]
    BadAssignment { expected: usize, got: usize },
    #[error("group generation cap of {cap} elements exceeded")]
    CapExceeded { cap: usize },
    #[error("complex is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
