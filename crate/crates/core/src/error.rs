use thiserror::Error;

use crate::lattice::Lat2;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("structural error: {0}")]
    Structure(String),

    #[error("invalid rotation system: {0}")]
    RotationSystem(String),

    #[error("no perfect matching can exist: {blacks} black vs {whites} white nodes")]
    NoMatching { blacks: usize, whites: usize },

    #[error("degenerate polygon: all matching classes are collinear")]
    DegeneratePolygon,

    #[error("no central candidate: no perfect matching has an interior class")]
    NoCentralCandidate,

    #[error("ambiguous origin: {0} occupied interior points, choose one explicitly")]
    AmbiguousOrigin(usize),

    #[error("boundary lattice point {point} is {problem}")]
    BoundaryMultiplicity { point: Lat2, problem: String },

    #[error("point {0} is not strictly interior to the polygon")]
    NotInterior(Lat2),

    #[error("unknown perfect matching `{0}`")]
    UnknownMatching(String),

    #[error("infinite dimension: restricted quiver has a directed cycle through faces {0:?}")]
    InfiniteDimension(Vec<usize>),

    #[error("unbounded support polyhedron for H^{degree} (pattern {pattern})")]
    UnboundedSupport { degree: usize, pattern: String },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("{0}")]
    Config(String),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
