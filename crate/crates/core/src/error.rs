use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree overflow: {0} + {1} exceeds 7")]
    DegreeOverflow(usize, usize),
    #[error("invalid form degree {0}")]
    InvalidDegree(usize),
    #[error("invalid basis index tuple {0:?}")]
    InvalidIndices(Vec<usize>),
    #[error("coordinate sets overlap or do not cover 1..7: {0}")]
    CoordinateOverlap(String),
    #[error("hyperkähler triple invariant violated: {0}")]
    InvalidTriple(String),
    #[error("circle element does not satisfy c² + s² = 1")]
    NotOnCircle,
    #[error("quaternion does not have unit norm")]
    NotUnit,
    #[error("group closure exceeded cap of {0} elements")]
    ClosureCapExceeded(usize),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("rejected input: {0}")]
    Rejected(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
