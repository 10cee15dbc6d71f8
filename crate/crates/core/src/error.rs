use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph is not strongly connected")]
    NotStronglyConnected,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("parameter assignment does not match the graph: {0}")]
    ParameterMismatch(String),

    #[error("vertex 1 has no exchange with vertex {0}")]
    NoExchangeWith(usize),

    #[error("edge {0}->{1} is not in the graph")]
    NoSuchEdge(usize, usize),

    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),

    #[error("edge sets overlap when gluing graphs: {0}->{1}")]
    OverlapViolation(usize, usize),

    #[error("unsupported size n={n} (supported: {min}..={max})")]
    UnsupportedSize { n: usize, min: usize, max: usize },

    #[error("{0} is not a usable prime modulus")]
    InvalidPrime(u64),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("criteria disagree: {0}")]
    OracleDisagreement(String),

    #[error("repair produced a variant without the expected dimension: {0}")]
    RepairFailed(String),
}
