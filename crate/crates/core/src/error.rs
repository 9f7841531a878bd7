use thiserror::Error;

/// Errors surfaced by input validation and the selection drivers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("input is empty")]
    EmptyInput,

    #[error("value at index {index} is not a number")]
    NotANumber { index: usize },

    #[error("value at index {index} ({value}) is infinite or too large in magnitude to be summed exactly")]
    OutOfRange { index: usize, value: f64 },

    #[error("input is not sorted: element {index} is smaller than its predecessor")]
    Unsorted { index: usize },

    #[error("rank {k} is out of bounds (valid ranks are 1..={max})")]
    RankOutOfBounds { k: u64, max: u64 },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("internal invariant broken: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
