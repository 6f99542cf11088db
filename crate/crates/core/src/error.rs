use thiserror::Error;

/// Errors produced by polygon construction and the descent machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polygon needs at least 4 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex list is not centrally symmetric")]
    NotCentrallySymmetric,
    #[error("vertex list is not strictly convex")]
    NotConvex,
    #[error("vertex list is not counterclockwise")]
    WrongOrientation,
    #[error("linear map is singular")]
    SingularMap,
    #[error("type-2 parallelogram is undefined on a parallelogram")]
    DegenerateParallelogram,
    #[error("operation needs at least 6 sides")]
    TooFewSides,
    #[error("no edge satisfies the parallelogram-ratio inequality on the selected side")]
    NoQualifyingEdge,
    #[error("unknown polygon name `{0}`")]
    UnknownName(String),
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// A proven statement failed on concrete input. Never expected.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for errors that signal a falsified theorem rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_) | Error::NoQualifyingEdge)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
