use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("parts {0:?} are not weakly decreasing")]
    NotDecreasing(Vec<usize>),

    #[error("invalid Frobenius coordinates: {0}")]
    Frobenius(String),

    #[error("cell ({row},{col}) is not in the diagram of {partition}")]
    CellOutside {
        row: usize,
        col: usize,
        partition: String,
    },

    #[error("the empty partition has no rim")]
    EmptyRim,

    #[error("rim hook does not belong to {0}")]
    HookMismatch(String),

    #[error("size mismatch: partition of {partition} vs cycle type of {cycles}")]
    SizeMismatch { partition: usize, cycles: usize },

    #[error("n = {n} exceeds the configured budget of {budget}")]
    BudgetExceeded { n: usize, budget: usize },

    #[error("invalid extremal parameters: {0}")]
    Extremal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
