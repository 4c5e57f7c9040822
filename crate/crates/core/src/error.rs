use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("power must be at least 1")]
    ZeroPower,

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("planar_code: {0}")]
    PlanarCode(String),

    #[error("invalid rotation system: {0}")]
    Rotation(String),

    #[error("invalid coloring: {0}")]
    Coloring(String),

    #[error("missing color list for vertex {0}")]
    MissingList(usize),

    #[error("drum parameter k must be at least 1")]
    ZeroDrum,

    #[error("invalid drum certificate: {0}")]
    Certificate(String),

    #[error("not a fullerene: {0}")]
    NotFullerene(String),

    #[error("drum coloring failed: {0}")]
    DrumColoring(String),

    #[error("unknown gadget `{0}`")]
    UnknownGadget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
