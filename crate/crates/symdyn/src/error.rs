use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("alphabet labels must be distinct and nonempty, got {0:?}")]
    BadAlphabet(Vec<char>),

    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),

    #[error("symbol index {index} out of range for alphabet of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("operation requires a binary alphabet, got size {0}")]
    UnsupportedAlphabet(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("substitution seed {seed:?} is not prolongable: {reason}")]
    NotProlongable { seed: char, reason: String },

    #[error("unknown sequence name {0:?}")]
    UnknownName(String),

    #[error("directive/continued-fraction entries invalid: {0}")]
    BadDirective(String),

    #[error("the forbidden words leave an empty subshift")]
    EmptySubshift,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("resource budget exceeded: {0}")]
    ResourceBudget(String),

    #[error("Markov chain has no unique recurrent class; stationary vector is ambiguous")]
    ReducibleChain,

    #[error("probability {value} for {name} outside [0,1]")]
    BadProbability { name: String, value: f64 },

    #[error("coefficient measure must be symmetric about 1/2 and have total mass 1")]
    AsymmetricMeasure,

    #[error("prefix too short: computed lower bound {lower_bound} but found no repeat; extend the word")]
    PartialResult { lower_bound: usize },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the CLI: 2 usage, 3 resource budget, 4 precondition.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResourceBudget(_) => 3,
            Error::Precondition(_)
            | Error::ReducibleChain
            | Error::NotProlongable { .. }
            | Error::EmptySubshift
            | Error::PartialResult { .. } => 4,
            _ => 2,
        }
    }
}
