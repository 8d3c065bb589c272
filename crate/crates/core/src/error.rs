use thiserror::Error;

use crate::MAX_VERTICES;

/// Errors raised by graph construction and the exact solvers.
///
/// Vertex numbers carried by variants are 1-based labels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    EmptyGraph,

    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),

    #[error("edge ({0}, {1}) is a self-loop or references a missing vertex")]
    InvalidEdge(usize, usize),

    #[error("jump set is empty")]
    EmptyJumps,

    #[error("jump {jump} is outside 1..={max}")]
    JumpOutOfRange { jump: usize, max: usize },

    #[error("n must be even and ≥ 4 (got {0})")]
    InvalidFamilyParameter(usize),

    #[error("graph is disconnected: x_{0} cannot reach x_{1}")]
    Disconnected(usize, usize),

    #[error("{what} supports at most {cap} vertices (graph has {order})")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        order: usize,
    },

    #[error("search budget exhausted")]
    BudgetExhausted,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("k = {k} is outside 1 ≤ k ≤ n/2 − 1 = {max} required by the construction for n = {n}")]
    DominationRange { n: usize, k: usize, max: usize },

    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),

    #[error("invalid graph JSON: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
