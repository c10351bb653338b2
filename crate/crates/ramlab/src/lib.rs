//! Scenario configs, JSON reports and the command-line front end for
//! `ramlab-core`.

pub mod config;
pub mod error;
pub mod json;
pub mod render;
pub mod report;
pub mod run;

pub use config::{Format, Scenario, ScenarioConfig};
pub use error::CliError;
pub use report::{Claim, Report, Status};
