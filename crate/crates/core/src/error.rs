//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by graph construction, word operations, enumeration, and
/// the embedding machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A generator index lies outside `1..=n` for the ambient graph.
    #[error("generator index {index} out of range for a graph on {rank} generators")]
    OutOfRange { index: usize, rank: usize },

    /// A bond `{s,s}` was supplied; the diagonal is implicit.
    #[error("self-loop bond on generator {0} is not allowed")]
    SelfLoop(usize),

    /// A standard family was requested below its minimum rank.
    #[error("family {family} requires rank at least {min}, got {got}")]
    RankTooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },

    /// An interval does not fit inside the word it is applied to.
    #[error("interval [{lo},{hi}] out of range for a word of length {len}")]
    IntervalOutOfRange { lo: usize, hi: usize, len: usize },

    /// The word is not a reduced expression.
    #[error("word is not reduced")]
    NotReduced,

    /// The requested positions do not form a braid shadow.
    #[error("positions [{lo},{}] do not form a braid shadow", .lo + 2)]
    NotAShadow { lo: usize },

    /// The two letters at the requested positions do not commute.
    #[error("letters at positions {lo} and {} do not commute", .lo + 1)]
    NotACommutation { lo: usize },

    /// Closure enumeration grew past the configured cap.
    #[error("enumeration exceeded cap {cap} (at least {found} members found)")]
    CapExceeded { cap: usize, found: usize },

    /// A word was expected to be a member of the braid class but is not.
    #[error("word is not a member of the braid class")]
    NotInClass,

    /// A word was expected to be a link but is not.
    #[error("word is not a link")]
    NotALink,

    /// The operation requires a triangle-free Coxeter graph.
    #[error("Coxeter graph is not triangle free")]
    NotTriangleFree,

    /// A word was expected to be a Fibonacci link but is not.
    #[error("word is not a Fibonacci link")]
    NotFibonacci,

    /// A structural guarantee failed; this signals a bug in the library.
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    /// A string quadruple violates its constraints.
    #[error("invalid string parameters: {0}")]
    SpecInvalid(String),

    /// No class member exhibits the requested pair of overlapping shadows.
    /// This signals a bug: such a member always exists for link classes.
    #[error("no class member exhibits both requested shadows")]
    NoSuchMember,

    /// Two vertices carry the same binary label.
    #[error("vertices {0} and {1} carry the same label")]
    LabelCollision(usize, usize),

    /// A hypercube dimension above the supported guard was requested.
    #[error("dimension {0} exceeds the supported maximum {1}")]
    DimensionTooLarge(usize, usize),

    /// The graph is not connected.
    #[error("graph is not connected")]
    Disconnected,

    /// The graph failed a partial-cube certificate.
    #[error("graph is not a partial cube: {0}")]
    NotPartialCube(String),

    /// Brute-force search exhausted its bound without an answer.
    #[error("search bound {0} exceeded")]
    BoundExceeded(usize),

    /// The input graph is too large for an exhaustive check.
    #[error("graph too large for this check ({0} vertices, maximum {1})")]
    TooLarge(usize, usize),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
