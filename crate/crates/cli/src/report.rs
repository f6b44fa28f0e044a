//! CSV emission for sweeps, θ-scans and the worked-example report.

use std::io::Write;

use numrad_core::lab::{ExampleReport, ThetaScan, TrialRecord};

use crate::error::CliError;
use crate::matrix_file::fmt17;

pub const SWEEP_HEADER: [&str; 10] =
    ["bound", "r", "theta", "dim", "trial", "lhs", "rhs", "margin", "satisfied", "matrix_seed"];
pub const SCAN_HEADER: [&str; 4] = ["theta", "rhs", "lhs", "margin"];
pub const EXAMPLES_HEADER: [&str; 5] = ["example", "check", "claimed", "computed", "agree"];

pub fn write_sweep_csv<W: Write>(out: W, records: &[TrialRecord]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_HEADER)?;
    for rec in records {
        w.write_record([
            rec.bound.as_str().to_owned(),
            fmt17(rec.r),
            fmt17(rec.theta),
            rec.dim.to_string(),
            rec.trial_index.to_string(),
            fmt17(rec.lhs),
            fmt17(rec.rhs),
            fmt17(rec.margin),
            rec.satisfied.to_string(),
            rec.matrix_seed.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Scan rows; `lhs` is the same `w(A)^{2r}` on every row.
pub fn write_scan_csv<W: Write>(out: W, scan: &ThetaScan, lhs: f64) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SCAN_HEADER)?;
    for (&theta, &rhs) in scan.thetas.iter().zip(&scan.rhs_values) {
        w.write_record([fmt17(theta), fmt17(rhs), fmt17(lhs), fmt17(rhs - lhs)])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_examples_csv<W: Write>(out: W, report: &ExampleReport) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(EXAMPLES_HEADER)?;
    for row in &report.rows {
        w.write_record([row.example, &row.check, &row.claimed, &row.computed, &row.agree.to_string()])?;
    }
    w.flush()?;
    Ok(())
}
