use serde::Serialize;

use crate::bounds::{BoundId, BoundParams, Evaluator};
use crate::error::{check_param, Error, Result};
use crate::linop::{ComplexMatrix, DEFAULT_RTOL};
use crate::optim::golden_min;

/// Grid size of [`theta_minimize`]: 256 intervals plus both endpoints.
pub const MINIMIZE_GRID: usize = 257;

/// The weighted-mean right-hand side sampled on a uniform θ grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThetaScan {
    pub thetas: Vec<f64>,
    pub rhs_values: Vec<f64>,
    /// Smallest grid θ whose value is within `1e-12·max(1, |min|)` of the minimum.
    pub argmin: f64,
    pub min_value: f64,
}

/// Refined minimizer of the weighted-mean right-hand side over `θ ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThetaMinimum {
    pub theta: f64,
    pub rhs: f64,
}

/// `k/(m−1)` for `k = 0..m`, exact at both endpoints.
pub fn theta_grid(grid_size: usize) -> Vec<f64> {
    let last = (grid_size - 1) as f64;
    (0..grid_size).map(|k| k as f64 / last).collect()
}

fn check_grid(grid_size: usize) -> Result<()> {
    if grid_size < 2 {
        return Err(Error::InvalidParameter {
            name: "grid_size",
            value: grid_size as f64,
            reason: "a θ grid needs at least both endpoints",
        });
    }
    Ok(())
}

fn weighted_rhs(ev: &Evaluator, r: f64, theta: f64) -> Result<f64> {
    ev.rhs(BoundId::WeightedMean, BoundParams::new(r, theta)?)
}

/// Scans the weighted-mean right-hand side of `A` on a uniform grid.
pub fn theta_scan(a: &ComplexMatrix, r: f64, grid_size: usize) -> Result<ThetaScan> {
    theta_scan_on(&Evaluator::new(a.clone(), None, DEFAULT_RTOL)?, r, grid_size)
}

/// [`theta_scan`] reusing the caches (and radius tolerance) of an evaluator.
pub fn theta_scan_on(ev: &Evaluator, r: f64, grid_size: usize) -> Result<ThetaScan> {
    check_grid(grid_size)?;
    BoundParams::with_r(r)?;
    let thetas = theta_grid(grid_size);
    let rhs_values = thetas.iter().map(|&t| weighted_rhs(ev, r, t)).collect::<Result<Vec<_>>>()?;
    let min_value = rhs_values.iter().copied().fold(f64::INFINITY, f64::min);
    let tie = 1e-12 * min_value.abs().max(1.0);
    let k = rhs_values.iter().position(|&v| v <= min_value + tie).unwrap_or(0);
    Ok(ThetaScan { argmin: thetas[k], min_value, thetas, rhs_values })
}

/// Minimizes the weighted-mean right-hand side over θ.
///
/// A [`MINIMIZE_GRID`]-point scan picks the best bracket, then golden-section
/// search refines it until the θ bracket is narrower than `rtol`. The grid
/// value wins ties, so the result never exceeds the scan minimum.
pub fn theta_minimize(a: &ComplexMatrix, r: f64, rtol: f64) -> Result<ThetaMinimum> {
    theta_minimize_on(&Evaluator::new(a.clone(), None, DEFAULT_RTOL)?, r, rtol)
}

/// [`theta_minimize`] reusing the caches of an evaluator.
pub fn theta_minimize_on(ev: &Evaluator, r: f64, rtol: f64) -> Result<ThetaMinimum> {
    check_param("rtol", rtol, rtol > 0.0, "tolerance must be positive")?;
    let scan = theta_scan_on(ev, r, MINIMIZE_GRID)?;
    let k = scan.thetas.iter().position(|&t| t == scan.argmin).unwrap_or(0);
    let lo = scan.thetas[k.saturating_sub(1)];
    let hi = scan.thetas[(k + 1).min(MINIMIZE_GRID - 1)];
    let (theta, rhs) = golden_min(|t| weighted_rhs(ev, r, t), lo, hi, rtol)?;
    if rhs < scan.min_value {
        Ok(ThetaMinimum { theta, rhs })
    } else {
        Ok(ThetaMinimum { theta: scan.argmin, rhs: scan.min_value })
    }
}

/// Grid θ values at which the weighted-mean bound holds with equality:
/// `|w(A)^{2r} − rhs(θ)| ≤ tol·max(1, ‖A‖)^{2r}`.
pub fn equality_theta_set(a: &ComplexMatrix, r: f64, grid_size: usize, tol: f64) -> Result<Vec<f64>> {
    equality_theta_set_on(&Evaluator::new(a.clone(), None, DEFAULT_RTOL)?, r, grid_size, tol)
}

pub fn equality_theta_set_on(ev: &Evaluator, r: f64, grid_size: usize, tol: f64) -> Result<Vec<f64>> {
    check_param("tol", tol, tol >= 0.0, "tolerance must be nonnegative")?;
    let scan = theta_scan_on(ev, r, grid_size)?;
    let lhs = ev.lhs(BoundId::WeightedMean, BoundParams::with_r(r)?)?;
    let allowed = tol * ev.a().scale().powf(2.0 * r);
    Ok(scan
        .thetas
        .iter()
        .zip(&scan.rhs_values)
        .filter(|(_, &rhs)| (lhs - rhs).abs() <= allowed)
        .map(|(&t, _)| t)
        .collect())
}
