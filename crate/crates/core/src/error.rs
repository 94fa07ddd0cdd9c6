use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge ({0}, {1}) has multiplicity < 1")]
    ZeroMultiplicity(usize, usize),
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("vertex set is empty or covers every vertex, so it defines no cut")]
    NoCut,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not simple")]
    NotSimple,
    #[error("graph has no edges")]
    Edgeless,
    #[error("object lives on {found} vertices but the host graph has {expected}")]
    HostMismatch { expected: usize, found: usize },
    #[error("egg {0} is empty")]
    EmptyEgg(usize),
    #[error("egg {0} is not connected in the host graph")]
    DisconnectedEgg(usize),
    #[error("scramble has no eggs")]
    EmptyScramble,
    #[error("graph too large for this routine ({n} vertices, limit {limit})")]
    TooLarge { n: usize, limit: usize },
    #[error("hypotheses failed: {}", .0.join("; "))]
    Hypothesis(Vec<String>),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("soundness check failed: {0}")]
    Soundness(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
