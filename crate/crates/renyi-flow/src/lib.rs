//! Experiment harness around `renyi-flow-core`.
//!
//! An experiment is a JSON [`ExperimentConfig`]. [`run()`] executes it and
//! writes an artifact directory (`manifest.json`, trajectory CSVs,
//! `decay_curve.csv`, `inequalities.csv`, ...); [`sweep()`] repeats a run over
//! the values of one parameter on worker threads and merges the summaries
//! into `sweep.csv`.

pub mod config;
pub mod datum;
pub mod error;
pub mod io;
pub mod presets;
pub mod run;
pub mod sweep;

pub use config::{ExperimentConfig, GridSpec, InitialDatum, Scenario};
pub use error::{HarnessError, Result};
pub use presets::preset;
pub use run::{run, Check, RunSummary, TOLERANCES};
pub use sweep::{sweep, SweepParam, SweepReport};
