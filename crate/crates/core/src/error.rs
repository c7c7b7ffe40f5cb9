use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge {edge} endpoint {endpoint} is not a vertex (quiver has {vertices} vertices)")]
    EdgeOutOfRange {
        edge: usize,
        endpoint: usize,
        vertices: usize,
    },

    #[error("`{field}` has length {actual}, expected {expected}")]
    LengthMismatch {
        field: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("point has {actual} coordinates but the Cartan has dimension {expected}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("stratum pattern is not a partition of the {slots} slots: {reason}")]
    InvalidPattern { slots: usize, reason: String },

    #[error("datum is not connected")]
    NotConnected,

    #[error("datum is not trimmed: vertex {vertex} has framing {framing} but no gauge slots")]
    NotTrimmed { vertex: usize, framing: u32 },

    #[error("coweight has {actual} coordinates but the flavour lattice has rank {expected}")]
    CoweightRank { expected: usize, actual: usize },

    #[error("factor is not compatible with the parent datum: {0}")]
    IncompatibleFactor(String),

    #[error("{path}:{line}:{column}: {message}")]
    Input {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
}
