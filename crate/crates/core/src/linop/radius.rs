use std::f64::consts::{PI, TAU};

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::hermitian::{hermitian_eigenvalues, HermitianEig};
use super::matrix::{adjoint, rotated_hermitian_part, ComplexMatrix};
use super::norms::operator_norm;
use crate::error::{check_param, Result};
use crate::optim::golden_max;

/// Default relative tolerance for [`numerical_radius`].
pub const DEFAULT_RTOL: f64 = 1e-8;
/// Smallest coarse angle grid.
pub const MIN_GRID: usize = 1024;
/// Largest coarse angle grid.
pub const MAX_GRID: usize = 65_536;
/// Bracket width at which golden-section refinement stops.
pub const REFINE_WIDTH: f64 = 1e-12;
/// Upper limit on refined brackets; only the highest grid-local maxima are refined.
const MAX_REFINED: usize = 64;

/// Certified enclosure of the numerical radius.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusResult {
    /// `|⟨A x, x⟩|` at the witness, a lower bound for `w(A)`.
    pub value: f64,
    /// Certified upper bound for `w(A)`.
    pub upper: f64,
    /// Rotation angle in `[0, 2π)` where the top eigenvalue of the rotated
    /// Hermitian part peaks.
    pub argmax_angle: f64,
    /// Unit vector attaining `value`.
    pub witness: Vec<Complex64>,
}

/// Number of coarse grid angles used for a given relative tolerance.
///
/// `max(1024, ⌈π/rtol⌉)` capped at 65536, rounded up to an even count so that
/// the grid is symmetric under `φ ↦ φ + π`.
pub fn coarse_grid_size(rtol: f64) -> usize {
    let raw = (PI / rtol).ceil();
    let n = if raw.is_finite() && raw < MAX_GRID as f64 { raw as usize } else { MAX_GRID };
    let n = n.clamp(MIN_GRID, MAX_GRID);
    n + n % 2
}

/// Computes `w(A) = max_φ λ_max((e^{iφ}A + e^{-iφ}A*)/2)`.
///
/// A uniform grid of [`coarse_grid_size`] angles locates every candidate
/// peak; golden-section search refines each bracket to [`REFINE_WIDTH`].
/// The objective is Lipschitz with constant `‖A‖`, and adding `‖A‖·φ²/2`
/// makes it convex (it is a maximum of sinusoids of amplitude at most
/// `‖A‖`), so between neighbouring grid angles it exceeds the larger endpoint
/// by at most `‖A‖·min(h/2, h²/8)`. `upper` is that grid enclosure plus
/// eigensolver rounding, clamped to `[value, ‖A‖]`.
pub fn numerical_radius(a: &ComplexMatrix, rtol: f64) -> Result<RadiusResult> {
    check_param("rtol", rtol, rtol > 0.0, "tolerance must be positive")?;
    let n = a.n();
    if n == 1 {
        let z = a.get(0, 0);
        let angle = if z.norm() == 0.0 { 0.0 } else { (-z.arg()).rem_euclid(TAU) };
        return Ok(RadiusResult {
            value: z.norm(),
            upper: z.norm(),
            argmax_angle: angle,
            witness: vec![Complex64::ONE],
        });
    }
    let norm = operator_norm(a);
    if norm == 0.0 {
        let mut witness = vec![Complex64::ZERO; n];
        witness[0] = Complex64::ONE;
        return Ok(RadiusResult { value: 0.0, upper: 0.0, argmax_angle: 0.0, witness });
    }

    let rotor = Rotor::new(a);
    let grid = coarse_grid_size(rtol);
    let half = grid / 2;
    let h = TAU / grid as f64;

    // H(φ + π) = -H(φ), so one decomposition yields both f(φ) and f(φ + π).
    let mut f = vec![0.0; grid];
    for k in 0..half {
        let vals = hermitian_eigenvalues(&rotor.at(k as f64 * h));
        f[k] = vals[n - 1];
        f[k + half] = -vals[0];
    }
    let grid_max = f.iter().copied().fold(f64::NEG_INFINITY, f64::max);

    // Grid-local maxima that could still hold the global peak. Plateaus
    // contribute their right edge; a constant profile has none, so fall
    // back to the first grid maximum.
    let slack = norm * h;
    let mut peaks: Vec<usize> = (0..grid)
        .filter(|&i| {
            let prev = f[(i + grid - 1) % grid];
            let next = f[(i + 1) % grid];
            f[i] >= prev && f[i] > next && f[i] + slack >= grid_max
        })
        .collect();
    if peaks.is_empty() {
        peaks.push(f.iter().position(|&v| v == grid_max).unwrap_or(0));
    }
    peaks.sort_by(|&i, &j| f[j].total_cmp(&f[i]).then(i.cmp(&j)));
    peaks.truncate(MAX_REFINED);

    let mut best = (0.0, f64::NEG_INFINITY);
    for &i in &peaks {
        let center = i as f64 * h;
        let mut cand = (center, f[i]);
        let (x, v) = golden_max(
            |phi| Ok::<_, crate::Error>(*hermitian_eigenvalues(&rotor.at(phi)).last().unwrap()),
            center - h,
            center + h,
            REFINE_WIDTH,
        )?;
        if v > cand.1 {
            cand = (x, v);
        }
        if cand.1 > best.1 {
            best = cand;
        }
    }

    let angle = best.0.rem_euclid(TAU);
    let top = HermitianEig::new(&rotated_hermitian_part(a, angle))?;
    let witness: Vec<Complex64> = top.eigenvectors().column(n - 1).iter().copied().collect();
    let value = a.quadratic_form(&witness).norm();
    let slack = norm * ((h / 2.0).min(h * h / 8.0) + 8.0 * n as f64 * f64::EPSILON);
    let upper = value.max((grid_max + slack).min(norm));
    Ok(RadiusResult { value, upper, argmax_angle: angle, witness })
}

/// Fast evaluation of `H(φ) = cos φ · Re A − sin φ · Im A`, with
/// `Re A = (A + A*)/2` and `Im A = (A − A*)/(2i)`.
struct Rotor {
    re: DMatrix<Complex64>,
    im: DMatrix<Complex64>,
}

impl Rotor {
    fn new(a: &ComplexMatrix) -> Self {
        let m = a.as_matrix();
        let m_star = adjoint(a).into_inner();
        let re = (m + &m_star) * Complex64::new(0.5, 0.0);
        let im = (m - &m_star) * Complex64::new(0.0, -0.5);
        Self { re, im }
    }

    fn at(&self, phi: f64) -> DMatrix<Complex64> {
        let (s, c) = phi.sin_cos();
        &self.re * Complex64::new(c, 0.0) - &self.im * Complex64::new(s, 0.0)
    }
}
