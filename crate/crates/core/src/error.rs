use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("arc {tail}->{head} is not an arc of the digraph")]
    UnknownArc { tail: usize, head: usize },

    #[error("digraph is not Eulerian")]
    NotEulerian,

    #[error("digraph is not strongly connected")]
    NotStronglyConnected,

    #[error("arc set contains a directed cycle")]
    NotAcyclic,

    #[error("vertex {sink} is not a global sink once its out-arcs are removed")]
    NoGlobalSink { sink: usize },

    #[error("vertex {vertex} is not active")]
    IllegalFiring { vertex: usize },

    #[error("stabilization exceeded the budget of {budget} firings")]
    StepBudgetExceeded { budget: u64 },

    #[error("chip count overflow")]
    Overflow,

    #[error("{what}: size {size} exceeds cap {cap}")]
    SizeLimit {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("configuration is not stable; active vertices {active:?}")]
    NotStable { active: Vec<usize> },

    #[error("configuration is not recurrent; unburnt vertices {unburnt:?}")]
    NotRecurrent { unburnt: Vec<usize> },

    #[error("configurations disagree on digraph size or sink")]
    ConfigurationMismatch,

    #[error("singular reduced Laplacian")]
    Singular,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}
