use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex id {id} out of range for {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("not a tree: {0}")]
    NotATree(&'static str),
    #[error("contract violation: {0}")]
    Contract(&'static str),
    #[error("a 3-connected supergraph needs at least 4 vertices, got {0}")]
    TooSmall(usize),
    #[error("augmented graph failed verification: {0}")]
    VerificationFailed(String),
    #[error("instance exceeds the search budget: {0}")]
    Budget(String),
    #[error("invalid generator parameters: {0}")]
    InvalidSpec(String),
}
