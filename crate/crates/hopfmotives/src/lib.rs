//! JSON formats, catalog loading and the command-line front end for
//! `hopfmotives-core`.

pub mod cli;
pub mod error;
pub mod loader;
pub mod schema;
pub mod text;

pub use error::CliError;
pub use hopfmotives_core as core;
