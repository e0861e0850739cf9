use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("ambient ring mismatch: expected {expected} variables, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("ambient variable count {0} outside 1..=63")]
    InvalidAmbient(usize),

    #[error("squarefree power exponent must be at least 1, got {0}")]
    InvalidExponent(usize),

    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,

    #[error("result would be the unit ideal")]
    UnitIdeal,

    #[error("{0} is not a prime usable as a field characteristic")]
    InvalidField(u32),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not a tree")]
    NotATree,

    #[error("family parameter n={0} must satisfy 6 <= n <= 63")]
    InvalidFamilyParameter(usize),

    #[error("sample {index} stayed the zero ideal after {attempts} attempts")]
    DegenerateSample { index: u64, attempts: u32 },

    #[error("exhaustive space of {size} ideals exceeds cap {cap}")]
    SpaceTooLarge { size: u128, cap: u64 },

    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
