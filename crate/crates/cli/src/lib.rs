//! Command layer for `rainbowtri`: run configuration, the JSON-lines report
//! log with its graph6 and coloring sidecars, the individual commands, and
//! the verification suites.
//!
//! Every command appends one report line to `<out_dir>/reports.jsonl`.
//! Exit codes: 0 exact result, 2 usage or domain error, 3 result bracketed
//! by an expired budget, 4 internal invariant violation or failed check.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;
pub mod verify;

pub use commands::{cmd_ar, cmd_construct, cmd_decompose, cmd_gen, cmd_rb, cmd_turan, ConstructKind};
pub use config::RunConfig;
pub use error::{CliError, CliResult};
pub use report::SearchReport;
pub use verify::{cmd_verify, Check, Suite};
