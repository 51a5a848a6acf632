//! File formats and commands behind the `hamsub` binary.

pub mod commands;
pub mod error;
pub mod input;
pub mod report;
pub mod table;

pub use error::CliError;
