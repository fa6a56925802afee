//! Exact computations around the singularity of random symmetric ±1 matrices.

pub mod error;
pub mod fpcore;
pub mod matcore;
pub mod anticon;
pub mod addstruct;
pub mod lemmalab;
pub mod cli;
pub mod parallel;

pub use error::{Error, Result};
