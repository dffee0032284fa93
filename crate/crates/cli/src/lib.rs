//! Experiment harness: JSON configs, parallel sweeps, CSV output and bound
//! reports.

pub mod bounds;
pub mod config;
mod error;
pub mod experiment;
pub mod output;
pub mod presets;

pub use bounds::BoundsReport;
pub use config::{ExperimentConfig, Overrides};
pub use error::{HarnessError, Result};
pub use experiment::{run_experiment, CellResult, ExperimentOutcome, SummaryRow};
pub use output::write_outputs;
