//! Command-line frontend: polynomial parsing, command dispatch and output rendering.

pub mod commands;
pub mod output;
pub mod parse;

pub use commands::{execute, run, Cli, CliError};
pub use output::OutputDoc;
pub use parse::{parse_poly, ParseError, PolyExpr};
