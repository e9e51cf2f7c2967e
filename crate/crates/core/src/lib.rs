pub mod algebra;
pub mod bits;
pub mod cli;
pub mod codes;
pub mod designs;
pub mod embedding;
pub mod error;
pub mod geometry;
pub mod iso;
pub mod reproduce;

pub use designs::{DesignParams, IncidenceStructure, Resolution};
pub use error::{Error, Result};
