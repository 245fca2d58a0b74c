pub mod cli;
pub mod error;
pub mod exact;
pub mod field;
pub mod group;
pub mod heights;
pub mod invariants;
pub mod lattice;
pub mod pairs;

pub use error::{Error, Result};
