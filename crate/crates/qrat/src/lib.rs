//! JSON file formats and the command-line front end for `qrat-core`.

pub mod cli;
pub mod error;
pub mod formats;

pub use cli::{run, Output};
pub use error::CliError;
