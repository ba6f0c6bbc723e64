use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scalar orders {left} and {right} have no common embedding")]
    OrderMismatch { left: u32, right: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("root-of-unity order must be positive")]
    ZeroOrder,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("boundary mismatch: left side has {left} points, right side expects {right}")]
    BoundaryMismatch { left: usize, right: usize },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("malformed word: {0}")]
    MalformedWord(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("rewriting did not terminate within {0} steps")]
    RewriteLimit(usize),

    #[error("operation requires a rectangular morphism (no rotation)")]
    NotRectangular,

    #[error("not gauge invariant: {creations} creations vs {annihilations} annihilations")]
    NotGaugeInvariant { creations: usize, annihilations: usize },

    #[error("module relation violated: {0}")]
    RelationViolated(String),

    #[error("invalid specification: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
