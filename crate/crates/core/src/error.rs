use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("malformed graph6 input: {0}")]
    Graph6(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{0}")]
    InvalidArgument(String),
    #[error("graph order {n} exceeds the limit {limit} for {what}")]
    OrderLimit { what: &'static str, n: usize, limit: usize },
    #[error("estimated {states} state transitions exceed the guard of {limit}")]
    StateSpaceGuard { states: u64, limit: u64 },
    #[error("number of cops {0} exceeds the supported maximum of {max}", max = crate::game::MAX_COPS)]
    TooManyCops(usize),
    #[error("{0} number exceeds the supported maximum of {max} cops", max = crate::game::MAX_COPS)]
    NumberAboveLimit(String),
    #[error("graph is not a cograph")]
    NotCograph,
    #[error("strategy undefined at state {0}")]
    StrategyUndefined(String),
    #[error("membership precondition failed: {0}")]
    Membership(String),
    #[error("trace invariant violated: {0}")]
    Trace(String),
}

pub type Result<T> = std::result::Result<T, Error>;
