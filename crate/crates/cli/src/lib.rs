//! Command-line layer: graph file parsing, JSON reports, and the subcommand
//! runners behind the `kway` binary.

pub mod cli;
pub mod format;
pub mod report;
