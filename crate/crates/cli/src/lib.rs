//! Library side of the `compel` binary: argument types, report rows and
//! the code behind each subcommand.

pub mod args;
pub mod families;
pub mod report;
pub mod run;
pub mod suites;

pub use args::{Cli, Command, Format};
pub use report::RunReport;
pub use run::{execute, Outcome};
