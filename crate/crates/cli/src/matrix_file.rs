//! JSON matrix files: `{"n": 2, "entries": [[[re, im], [re, im]], ...]}`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use numrad_core::{Complex64, ComplexMatrix};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    n: usize,
    entries: Vec<Vec<Vec<f64>>>,
}

/// Parses matrix-file text. Errors name the offending row (0-based).
pub fn parse_matrix(text: &str) -> Result<ComplexMatrix, String> {
    let raw: RawFile = serde_json::from_str(text).map_err(|e| format!("invalid matrix file: {e}"))?;
    let n = raw.n;
    if n == 0 {
        return Err("n must be positive".into());
    }
    if raw.entries.len() != n {
        return Err(format!("expected {n} rows, found {}", raw.entries.len()));
    }
    let mut rows = Vec::with_capacity(n);
    for (i, row) in raw.entries.iter().enumerate() {
        if row.len() != n {
            return Err(format!("row {i}: expected {n} entries, found {}", row.len()));
        }
        let mut out = Vec::with_capacity(n);
        for (j, pair) in row.iter().enumerate() {
            let [re, im] = pair[..] else {
                return Err(format!("row {i}, column {j}: expected a [re, im] pair, found {} numbers", pair.len()));
            };
            if !re.is_finite() || !im.is_finite() {
                return Err(format!("row {i}, column {j}: non-finite value"));
            }
            out.push(Complex64::new(re, im));
        }
        rows.push(out);
    }
    ComplexMatrix::from_rows(&rows).map_err(|e| e.to_string())
}

pub fn read_matrix(path: &Path) -> Result<ComplexMatrix, CliError> {
    let input = |message: String| CliError::Input { path: path.to_owned(), message };
    let text = fs::read_to_string(path).map_err(|e| input(e.to_string()))?;
    parse_matrix(&text).map_err(input)
}

/// Serializes with 17 significant digits so every double reads back exactly.
pub fn format_matrix(a: &ComplexMatrix) -> String {
    let n = a.n();
    let mut s = format!("{{\n  \"n\": {n},\n  \"entries\": [\n");
    for (i, row) in a.to_rows().iter().enumerate() {
        s.push_str("    [");
        for (j, z) in row.iter().enumerate() {
            let sep = if j + 1 < n { ", " } else { "" };
            let _ = write!(s, "[{}, {}]{sep}", fmt17(z.re), fmt17(z.im));
        }
        s.push_str(if i + 1 < n { "],\n" } else { "]\n" });
    }
    s.push_str("  ]\n}\n");
    s
}

pub fn write_matrix(path: &Path, a: &ComplexMatrix) -> Result<(), CliError> {
    Ok(fs::write(path, format_matrix(a))?)
}

/// A double with 17 significant digits.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}
