use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for a graph on {vertex_count} vertices")]
    IndexOutOfRange { index: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("no edge ({0}, {1}) in graph")]
    NoSuchEdge(usize, usize),
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("graph is neither a tree nor unicyclic")]
    NotTreeOrUnicyclic,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("anchor is not part of the graph")]
    AnchorNotInGraph,
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("cycle segment of length {0} is too short for a simple graph")]
    CycleTooShort(usize),
    #[error("construction is not a simple graph: {0}")]
    NotSimple(String),
    #[error("infeasible class filter: {0}")]
    InfeasibleFilter(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
