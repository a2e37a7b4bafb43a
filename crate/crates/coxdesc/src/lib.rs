//! IO, file formats and the command-line front end for `coxdesc-core`.

pub mod cache;
pub mod commands;
pub mod error;
pub mod spec_input;
pub mod table;
pub mod weights;

pub use error::{CliError, CliResult};
