use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex universe of size {0} exceeds the 63-vertex limit")]
    UniverseTooLarge(usize),

    #[error("invalid vertex universe: {0}")]
    InvalidUniverse(String),

    #[error("face {face:#b} is not contained in the vertex set {ground:#b}")]
    FaceOutOfUniverse { face: u64, ground: u64 },

    #[error("operands overlap on vertices {0:#b}")]
    OverlappingUniverses(u64),

    #[error("operation undefined on the void complex")]
    VoidComplex,

    #[error("hypergraph is not uniform")]
    NonUniform,

    #[error("invalid interval specification: {0}")]
    InvalidIntervals(String),

    #[error("invalid family specification: {0}")]
    InvalidFamily(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("subset enumeration over {n} vertices exceeds the limit of {limit}")]
    EnumerationLimit { n: usize, limit: usize },

    #[error("f-vector route produced a negative Betti number at (i={i}, j={j}); the resolution is not linear")]
    NotLinear { i: usize, j: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Input(String),
}

impl Error {
    /// True for errors caused by exceeding a configured resource bound.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::EnumerationLimit { .. } | Error::UniverseTooLarge(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
