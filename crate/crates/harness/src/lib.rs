//! Runners behind the `ktdom` command: solving single instances, checking
//! claims over parameter grids and scanning product graphs for data points.

pub mod grid;
pub mod ledger;
pub mod run;

pub use grid::{CorpusSpec, IntRange};
pub use ledger::{write_rows, DetailedRow, Format, LedgerRow, COLUMNS};
pub use run::{
    evaluate, grid, run_scan, run_solve, run_verify, Outcome, RunOptions, ScanConfig, SolveConfig,
    Source, TaskOutcome, VerifyConfig,
};
