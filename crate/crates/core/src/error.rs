use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bound must be at least 1")]
    ZeroBound,

    #[error("bound {bound} exceeds the enumeration guard ({limit}) for {what}")]
    BoundTooLarge {
        what: &'static str,
        bound: u64,
        limit: u64,
    },

    #[error("{0} edges exceed the enumeration guard of {1}")]
    GuardExceeded(usize, usize),

    #[error("not a pair: {0} and {1} are equal")]
    NotAPair(String, String),

    #[error("empty edge")]
    EmptyEdge,

    #[error("invalid vertex: {0}")]
    InvalidVertex(String),

    #[error("gadget undefined for a host edge of size {0}")]
    GadgetUndefined(usize),

    #[error("{edge} is not an edge of {construction}")]
    NotAnEdge { construction: String, edge: String },

    #[error("malformed presentation: {0}")]
    Malformed(String),

    #[error("not a matching: {0}")]
    NotAMatching(String),

    #[error("not a cover: {0}")]
    NotACover(String),

    #[error("not a vertex-cover: {0}")]
    NotAVertexCover(String),

    #[error("not a colouring: {0}")]
    NotAColouring(String),

    #[error("witness does not apply: {0}")]
    BadWitness(String),

    #[error("incomparable presentations: {0}")]
    Incomparable(String),

    #[error("stream exhausted although declared infinite")]
    StreamExhausted,

    #[error("need at least two edges, found {0}")]
    TooFewEdges(usize),

    #[error("coordinate overflow")]
    Overflow,

    #[error("invalid JSON: {0}")]
    Json(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
