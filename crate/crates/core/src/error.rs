use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("grid cell side must be positive, got {0}")]
    NonPositiveSide(f64),
    #[error("operation requires a non-empty input")]
    EmptyInput,
    #[error("coordinate {0} is too large to key on the grid")]
    CoordinateOverflow(f64),
    #[error("invalid point at ordinal {idx}: {reason}")]
    InvalidPoint { idx: usize, reason: &'static str },
    #[error("duplicate input ordinal {0}")]
    DuplicateIndex(usize),

    #[error("epsilon must be positive, got {0}")]
    NonPositiveEps(f64),
    #[error("epsilon {0} is too small: the grid parameter would exceed {1}")]
    EpsTooSmall(f64, u32),
    #[error("gamma must be positive, got {0}")]
    NonPositiveGamma(f64),
    #[error("lambda must be at least 1, got {0}")]
    LambdaTooSmall(f64),
    #[error("rectangle {idx} has a side outside [1, {lambda}]")]
    SideOutOfRange { idx: usize, lambda: f64 },

    #[error("exact search exceeded its node budget of {0}")]
    BudgetExceeded(u64),
    #[error("exact solver input has {size} elements, above the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("target {0} is not dominated by any candidate")]
    Infeasible(usize),
    #[error("weighted vertex cover is not supported (point {0} has weight != 1)")]
    WeightedVertexCover(usize),

    #[error("bad range: {0}")]
    BadRange(String),
    #[error("box too small to place {0} clusters with the required separation")]
    BoxTooSmall(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {0}: weight must be positive")]
    InvalidWeight(usize),
    #[error("line {0}: rectangle side outside the allowed range")]
    SideOutOfRangeLine(usize),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
