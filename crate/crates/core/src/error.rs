use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("half-edge pairing is not a fixed-point-free involution: {0}")]
    InvalidPairing(String),

    #[error("unknown vertex {vertex} (graph has {count} vertices)")]
    UnknownVertex { vertex: usize, count: usize },

    #[error("unknown chord label {0}")]
    UnknownChord(u32),

    #[error("chords must be distinct (got {0} twice)")]
    SameChord(u32),

    #[error("malformed chord diagram: {0}")]
    MalformedDiagram(String),

    #[error("graph is not connected ({0} components)")]
    Disconnected(usize),

    #[error("changing the transition splits the circuit into {0} closed curves")]
    SplitTraversal(usize),

    #[error("odd_gon requires k >= 1")]
    InvalidOddGon,

    #[error("unknown named graph '{0}'")]
    UnknownName(String),

    #[error("conflict does not match the graph's chord diagram: {0}")]
    ConflictMismatch(String),

    #[error("witness does not replay: {0}")]
    BadWitness(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("certificate does not validate: {0}")]
    InvalidCertificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
