//! Orchestration: the command-line front end, scan grids, exponent fits,
//! verification suites and CSV/JSON reports.

pub mod cli;
mod config;
mod fit;
mod grid;
mod report;
mod verify;

pub use cli::{main_with_args, run, Command, RunConfig, ZEROS_ENV};
pub use config::{config_args, parse_config};
pub use fit::{exponent_fit, ExponentFit};
pub use grid::log_grid;
pub use report::{
    delta_table, emit_report, parse_delta_csv, round_json, write_output, Cell, OutputFormat,
    Report, Table, DELTA_HEADER,
};
pub use verify::{run_suite, Check, Suite};
