//! Suite orchestration and reporting on top of `qc-core`.
//!
//! A suite is a list of check families, each expanded into parameterized
//! tasks. Tasks run independently (optionally in parallel) and produce one
//! [`CheckReport`] each, in a deterministic order.

mod catalog;
mod report;
mod suite;

pub use catalog::{expand, Family, Outcome, Overrides, Task, FIXTURE_ID};
pub use report::{format_report, params_label, witness_digest, CheckReport, OutputFormat};
pub use suite::{run_suite, Selection, SuiteConfig, SuiteRun, PARALLELISM_ENV};

use thiserror::Error;

/// Problems detected before any check runs; they map to exit code 2.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SuiteError {
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("out of suite bounds (pass unsafe_extended to allow): {0}")]
    OutOfBounds(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
}
