use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("division is not exact: {0}")]
    InexactDivision(String),

    #[error("diagram has {0} open twist sites but a closed diagram is required")]
    OpenSites(usize),

    #[error("invalid diagram: {0}")]
    Diagram(String),

    #[error("writhe requires orientation data or explicit signs on all crossings")]
    MissingOrientation,

    #[error("A-exponent {0} not divisible by 4; writhe is inconsistent with the bracket")]
    JonesExponent(i64),

    #[error("invalid family spec: {0}")]
    Family(String),

    #[error("sites {0} and {1} are not adjacent (they must share exactly two edges compatibly)")]
    NotAdjacent(usize, usize),

    #[error("height cap {cap} exceeded in nu search (guaranteed bound {bound})")]
    HeightCapExceeded { cap: i64, bound: i64 },

    #[error("root finding failed: {0}")]
    RootFinding(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
