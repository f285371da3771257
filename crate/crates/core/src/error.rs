use thiserror::Error;

/// Errors raised by the construction, verification and search routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("symbol {symbol} at column {column} is outside alphabet Z_{alphabet}")]
    SymbolOutOfRange {
        symbol: u32,
        column: usize,
        alphabet: u32,
    },

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("invalid covering array: {0}")]
    InvalidArray(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unsupported strength t={0} (only 2 and 3 are supported)")]
    UnsupportedStrength(usize),

    #[error("hypergraph has no edges")]
    Edgeless,

    #[error("maximum degree {found} exceeds the bound {bound}")]
    DegreeBound { found: usize, bound: usize },

    #[error("search exhausted without a decomposition into {0} matchings")]
    SearchExhausted(usize),

    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("step {index}: {source}")]
    Step { index: usize, source: Box<Error> },

    #[error("unsupported hypergraph class: {}", .0.join("; "))]
    Unsupported(Vec<String>),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(message: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(message.into()))
}
