//! Command-line front end for `schur-vertex-core`: the commands, their JSON
//! forms, and the verification suites behind `verify` and `oracle`.

pub mod commands;
pub mod json;
pub mod report;
pub mod suites;

pub use commands::{CliError, Check, Suite, VertexMethod};
pub use report::{RunReport, Tally};
