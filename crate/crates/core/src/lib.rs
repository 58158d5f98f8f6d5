//! Finite monoidal categories, their centers, and spans of module categories.

pub mod centers;
pub mod cli;
pub mod error;
pub mod fincat;
pub mod group;
pub mod io;
pub mod limits;
pub mod monoidal;
pub mod report;
pub mod spans;

pub use error::{Error, Result};
pub use report::{Report, Violation};
