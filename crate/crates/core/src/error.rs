//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown generator symbol `{symbol}`")]
    UnknownSymbol { symbol: String },

    #[error("cannot parse word `{input}`: {reason}")]
    BadWord { input: String, reason: String },

    #[error("invalid group specification: {0}")]
    BadGroupSpec(String),

    #[error("rewriting system is not confluent: words `{left}` and `{right}` are distinct normal forms of the same element")]
    NonConfluent { left: String, right: String },

    #[error("ball construction exceeds the vertex budget of {budget} vertices (radius {radius})")]
    BudgetExceeded { budget: usize, radius: usize },

    #[error("element `{element}` is not a vertex of the ball")]
    NotInBall { element: String },

    #[error("vertices `{a}` and `{b}` are not adjacent in the ball")]
    NotAdjacent { a: String, b: String },

    #[error("`{element}` lies on the outermost sphere of the ball; no meaningful lower bound exists")]
    OnOuterSphere { element: String },

    #[error("enumeration exceeds the cap of {cap} paths (at least {at_least} exist)")]
    CapExceeded { cap: usize, at_least: usize },

    #[error("invalid scaling function: {0}")]
    BadScaling(String),

    #[error("invalid distortion function: {0}")]
    BadDistortion(String),

    #[error("the pair (f, alpha) is not admissible: {0}")]
    NotAdmissible(String),

    #[error("declared map class fails on ({x}, {y}): {detail}")]
    MapClassViolation { x: String, y: String, detail: String },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
