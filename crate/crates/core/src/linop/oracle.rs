use std::f64::consts::TAU;

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

const SAMPLES: usize = 4096;

/// Numerical radius of a 2×2 matrix from the elliptical range theorem.
///
/// `W(A)` is the closed elliptical disk with foci at the eigenvalues
/// `λ₁, λ₂` and minor semi-axis `√(tr(A*A) − |λ₁|² − |λ₂|²)/2`; the radius is
/// the largest modulus on its boundary, found by sampling the ellipse
/// parameter and refining each sampled peak with a ternary search.
/// Shares no code with the angle-sweep solver, so it serves as a test oracle.
pub fn numerical_radius_2x2_oracle(a: &ComplexMatrix) -> Result<f64> {
    if a.n() != 2 {
        return Err(Error::DimensionMismatch { left: a.n(), right: 2 });
    }
    let (p, q, r, s) = (a.get(0, 0), a.get(0, 1), a.get(1, 0), a.get(1, 1));
    let half_tr = (p + s) * 0.5;
    let det = p * s - q * r;
    let disc = (half_tr * half_tr - det).sqrt();
    let (l1, l2) = (half_tr + disc, half_tr - disc);

    let frob2 = p.norm_sqr() + q.norm_sqr() + r.norm_sqr() + s.norm_sqr();
    let minor = 0.5 * (frob2 - l1.norm_sqr() - l2.norm_sqr()).max(0.0).sqrt();
    let focal = 0.5 * (l1 - l2).norm();
    let major = (minor * minor + focal * focal).sqrt();
    let center = half_tr;
    let axis = if focal > 0.0 { (l1 - l2) / (2.0 * focal) } else { Complex64::ONE };

    let modulus = |t: f64| (center + axis * Complex64::new(major * t.cos(), minor * t.sin())).norm();

    let step = TAU / SAMPLES as f64;
    let vals: Vec<f64> = (0..SAMPLES).map(|k| modulus(k as f64 * step)).collect();
    let mut best = vals.iter().copied().fold(0.0_f64, f64::max);
    for k in 0..SAMPLES {
        let prev = vals[(k + SAMPLES - 1) % SAMPLES];
        let next = vals[(k + 1) % SAMPLES];
        if vals[k] < prev || vals[k] < next {
            continue;
        }
        let (mut lo, mut hi) = ((k as f64 - 1.0) * step, (k as f64 + 1.0) * step);
        while hi - lo > 1e-13 {
            let m1 = lo + (hi - lo) / 3.0;
            let m2 = hi - (hi - lo) / 3.0;
            if modulus(m1) < modulus(m2) {
                lo = m1;
            } else {
                hi = m2;
            }
        }
        best = best.max(modulus(0.5 * (lo + hi)));
    }
    Ok(best)
}
