//! Scenario-driven front end for `rimtori-core`: load a TOML scenario, run
//! one command over its records, print text lines or a JSON document.

pub mod commands;
pub mod error;
pub mod report;
pub mod scenario;

pub use commands::{run, Command};
pub use error::{CliError, CliResult};
pub use report::{Body, GroupOut, Record, Report};
pub use scenario::Scenario;
