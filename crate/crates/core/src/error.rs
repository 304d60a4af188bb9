use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The graph is larger than the configured enumeration cap.
    #[error("graph has {n} vertices, above the configured cap of {cap}")]
    SizeCap { n: usize, cap: usize },

    /// Bit-mask storage cannot hold more than 64 vertices.
    #[error("{n} vertices exceeds the hard limit of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid circulant: {0}")]
    InvalidCirculant(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph is not in the SQC class")]
    NotSqc,

    #[error("graph has an isolated vertex ({0})")]
    IsolatedVertex(usize),

    /// Two decision paths that must agree produced different answers.
    #[error("decision paths disagree on component {component:?}: {detail}")]
    PathDisagreement { component: Vec<usize>, detail: String },
}
