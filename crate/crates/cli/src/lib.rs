//! Library half of the `semiunital` command: the file format and the
//! subcommands, so both can be driven from tests.

pub mod format;
pub mod run;

pub use format::{dump, parse_file, parse_structure, Context, InputError, Item};
pub use run::{execute, Cli, Command, Outcome};
