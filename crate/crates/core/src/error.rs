use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("not a spanning tree: {0}")]
    NotATree(String),
    #[error("edge {0} is not a tree edge")]
    NotATreeEdge(String),
    #[error("tree edge {0} does not lie inside the X side of the cut")]
    NotInTX(String),
    #[error("edge {0} is not a swap edge for the failed edge")]
    NotASwapEdge(String),
    #[error("swap edges are not oriented consistently with the cut")]
    OrientationMismatch,
    #[error("vertex {0} is not on the X side of the cut")]
    SideViolation(usize),
    #[error("the failed edge has no swap edge (graph is not 2-edge-connected)")]
    EmptySwapSet,
    #[error("graph is not 2-edge-connected: edge {0} is a bridge")]
    NotTwoEdgeConnected(String),
    #[error("infeasible generator parameters: {0}")]
    InfeasibleSpec(String),
    #[error("exhaustive enumeration supports n <= 6, got n = {0}")]
    TooLarge(usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid instance: {0}")]
    Validation(Box<Error>),
}
