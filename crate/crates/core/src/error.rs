use thiserror::Error;

/// Errors surfaced by solvers, generators and graph construction.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClubError {
    #[error("vertex {vertex} is out of range for a graph with {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop on vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid modulator: {0}")]
    InvalidModulator(String),

    #[error("graph is not a cograph; induced P4 {0:?}")]
    NotACograph([usize; 4]),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("invalid source witness: {0}")]
    InvalidWitness(String),

    /// A solver produced a set that failed re-verification. This is a bug.
    #[error("internal verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, ClubError>;
