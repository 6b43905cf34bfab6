//! Exact partition combinatorics for easy groups.

pub mod algebra;
pub mod categories;
pub mod cumulants;
pub mod diagram_maps;
pub mod error;
pub mod gram;
pub mod group_oracle;
pub mod partition;
pub mod prob_laws;
pub mod tl_jones;
pub mod verify;

pub use error::{Error, Result};
