//! Command-line layer over `zetasaw-core`: single evaluations, figure-data scans
//! and verification suites, written as CSV or JSON.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod error;
pub mod eval;
pub mod output;
pub mod reference;
pub mod scan;
pub mod verify;

pub use config::{Format, RunConfig};
pub use error::{CliError, CliResult};
pub use output::Table;
