//! Command-line front end: JSON scenarios, a built-in catalog, JSON and text
//! reports, and an oracle mode.
//!
//! Exit statuses: 0 success, 1 usage or I/O, 2 schema, 3 validation,
//! 4 unsupported regime, 5 oracle disagreement.

pub mod catalog;
pub mod error;
pub mod int;
pub mod report;
pub mod run;
pub mod scenario;
pub mod verify;

pub use error::{Category, CliError};
pub use report::RunReport;
pub use run::{run, run_report, verify_scenario, Outcome, RunFlags};
pub use scenario::{Format, Scenario};
pub use verify::{verify, Verification};
