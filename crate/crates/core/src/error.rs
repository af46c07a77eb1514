use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a ground set of size {n}")]
    VertexOutOfRange { vertex: u32, n: usize },
    #[error("vertex {0} appears twice in one face")]
    DuplicateVertex(u32),
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<u32>),
    #[error("complex is not pure")]
    NotPure,
    #[error("{what}: {size} exceeds the gate of {gate}")]
    GateExceeded { what: &'static str, size: u128, gate: u128 },
    #[error("invalid vertex labels: {0}")]
    InvalidLabels(String),
    #[error("unrealizable construction: {0}")]
    Unrealizable(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("hypotheses violated: {0}")]
    Hypotheses(String),
    #[error("complex has no top-dimensional homology over {0}")]
    NoTopHomology(String),
    #[error("operation needs a complete Betti table")]
    PartialTable,
    #[error("diagonalization failed: {0}")]
    Diagonalization(String),
    #[error("unsupported coefficient field: {0}")]
    UnsupportedField(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
