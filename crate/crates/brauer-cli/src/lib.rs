//! GraphFile parsing and emission, DOT output, and the `brauer` subcommands.

pub mod commands;
pub mod dot;
pub mod error;
pub mod graphfile;

pub use error::CliError;
pub use graphfile::{emit, parse, GraphFile};
