pub mod duality;
pub mod error;
pub mod counting;
pub mod formulas;
pub mod lattice;
pub mod render;
pub mod verify;

pub use error::{Error, Result};
