use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex `{0}` is not present in the graph")]
    UnknownVertex(String),

    #[error("vertex `{vertex}` assigned to both `{first}` and `{second}`")]
    ConflictingLabel {
        vertex: String,
        first: String,
        second: String,
    },

    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(u32, u32),

    #[error("vertex {0} out of range")]
    VertexOutOfRange(u32),

    #[error("self-loop on vertex {0}")]
    SelfLoop(u32),

    #[error("graph has no edges")]
    EmptyGraph,

    #[error("score table does not match the graph's edge set")]
    ScoreMismatch,

    #[error("edge mask covers {got} edges, graph has {expected}")]
    MaskMismatch { expected: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("correlation undefined: {0}")]
    UndefinedCorrelation(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
