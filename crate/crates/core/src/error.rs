use alloc::string::String;

use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex id {id} out of range for n = {n}")]
    VertexOutOfRange { id: Vertex, n: usize },
    #[error("vertex {vertex} has degree {degree}, above the cap of {cap}")]
    DegreeCap {
        vertex: Vertex,
        degree: usize,
        cap: usize,
    },

    #[error("infeasible generator spec: {0}")]
    InfeasibleSpec(String),
    #[error("no simple graph found within {0} restarts")]
    RestartBudget(usize),
    #[error("size {n} exceeds the cap of {cap}")]
    SizeCap { n: usize, cap: usize },

    #[error("path order {k} is outside the supported range 2..={cap}")]
    PathOrder { k: usize, cap: usize },
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("view has a vertex of degree {0}, expected at most 2")]
    DegreeAboveTwo(usize),

    #[error("identity violated: {0}")]
    Identity(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
