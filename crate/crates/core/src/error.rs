use thiserror::Error;

/// Errors surfaced by fallible library operations.
///
/// Out-of-range vertex arguments to pure query functions are programmer
/// errors and panic instead, mirroring slice indexing.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("input graph is not chordal")]
    NotChordal,

    #[error("{what} is limited to {limit} vertices, got {got}")]
    TooLarge {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("vertex {0} appears in no bag of the tree model")]
    VertexNotInModel(usize),

    #[error("invalid tree model: {0}")]
    Model(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("complex exceeds the face budget of {0} faces")]
    FaceBudget(usize),

    #[error("{0} is not a prime suitable as a coefficient field characteristic")]
    NotPrime(u32),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
