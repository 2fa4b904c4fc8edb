use thiserror::Error;

/// Errors produced by lattice construction, counting and enumeration.
#[derive(Debug, Error)]
pub enum Error {
    #[error("poset must have at least one element")]
    Empty,
    #[error("poset has {0} elements; at most {max} are supported", max = crate::order::MAX_ELEMENTS)]
    TooLarge(usize),
    #[error("element {index} is out of range for a poset of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("cover ({0}, {0}) is reflexive")]
    SelfCover(usize),
    #[error("cover relation contains a cycle")]
    Cycle,
    #[error("cover ({0}, {1}) is implied by transitivity and is not a covering pair")]
    RedundantCover(usize, usize),
    #[error("cover graph is disconnected")]
    Disconnected,
    #[error("poset is not a lattice")]
    NotLattice,
    #[error("invalid adjunct pair ({a}, {b}): {reason}")]
    InvalidPair { a: usize, b: usize, reason: &'static str },
    #[error("{0}")]
    Domain(String),
    #[error("requested size {n} exceeds the enumeration ceiling {ceiling}; pass an explicit override to proceed")]
    CeilingExceeded { n: usize, ceiling: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
