//! Front end for the `ckq` verifier: argument model, suite runner and
//! report emission.

pub mod config;
pub mod report;
pub mod suite;

pub use config::{Check, Cli, Command, ConfigError, RunConfig};
pub use report::{emit, exit_code, Format, Record, ResidualSummary, RunReport, REPORT_FILE, SCHEMA_VERSION};
pub use suite::run_suite;
