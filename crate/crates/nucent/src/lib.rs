//! Scans, persistence, fits and the command line on top of `nucent-core`.

pub mod cli;
pub mod config;
pub mod csvio;
pub mod error;
pub mod report;
pub mod scan;
pub mod validate;

pub use error::{AppError, Result};
