use thiserror::Error;

use crate::lattice::TriCell;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Param(String),

    #[error("hole k={k} collides with the central rhombus of side {side}")]
    CoreCollision { k: u32, side: u32 },

    #[error("region is not fixed by {0}")]
    SymmetryAbsent(String),

    #[error("unsupported group action: {0}")]
    UnsupportedAction(String),

    #[error("graph contract violated: {0}")]
    Contract(String),

    #[error("a planar embedding is required")]
    EmbeddingRequired,

    #[error("graph has {vertices} vertices, above the oracle limit of {limit}")]
    BudgetExceeded { vertices: usize, limit: usize },

    #[error("formula did not evaluate to an integer: {0}")]
    NonIntegral(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("cell {0} is not part of the region")]
    MissingCell(TriCell),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Param(msg.into()))
}
