//! Command-line front end for `lattice-solids`. Every command prints one
//! JSON document (see `docs/output-schema.md`); sequence-shaped results can
//! be printed as CSV instead.

pub mod args;
pub mod commands;
pub mod output;

pub use args::Cli;
pub use commands::{run, CliError};
pub use output::{OutputRecord, SCHEMA_VERSION};
