//! Command-line driver: configures a case, runs the requested suites and
//! emits a text summary plus a JSON report.

mod config;
mod report;
mod run;

use std::ffi::OsString;

use clap::Parser;

pub use config::{Args, CaseConfig, PairKind, QMode, Task, LONG_TASKS};
pub use report::{validate_report, Environment, Report, Status, TaskReport, SCHEMA};
pub use run::{exit_code, run, RECT_CASES, SCHUR_WEIGHT, UNIT_ARITY_CAP};

/// Parses `args`, runs the case, prints the summary and writes the report.
/// Returns the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let config = match CaseConfig::from_args(args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("qch: {e}");
            return 2;
        }
    };
    let output = config.output.clone();
    let report = run(config);
    print!("{}", report.summary());
    if let Some(path) = output {
        if let Err(e) = std::fs::write(&path, report.to_json() + "\n") {
            eprintln!("qch: cannot write {}: {e}", path.display());
            return 2;
        }
    }
    exit_code(&report)
}
