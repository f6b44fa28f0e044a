//! Library half of the `numrad` binary: matrix files, CSV reports and the
//! command implementations.

pub mod commands;
pub mod error;
pub mod matrix_file;
pub mod report;

pub use commands::{run, Cli, Command};
pub use error::CliError;
pub use matrix_file::{format_matrix, parse_matrix, read_matrix, write_matrix};
