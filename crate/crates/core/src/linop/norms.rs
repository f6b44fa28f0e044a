use nalgebra::linalg::Schur;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Largest singular value.
pub fn operator_norm(a: &ComplexMatrix) -> f64 {
    if a.n() == 1 {
        return a.get(0, 0).norm();
    }
    a.as_matrix().singular_values().iter().fold(0.0_f64, |m, &s| m.max(s))
}

/// All eigenvalues of a general (non-Hermitian) matrix, via the complex Schur form.
pub fn eigenvalues(a: &ComplexMatrix) -> Result<Vec<num_complex::Complex64>> {
    if a.n() == 1 {
        return Ok(vec![a.get(0, 0)]);
    }
    let schur = Schur::try_new(a.as_matrix().clone(), f64::EPSILON, 100_000)
        .ok_or(Error::NoConvergence("Schur eigensolver"))?;
    let (_, t) = schur.unpack();
    Ok(t.diagonal().iter().copied().collect())
}

/// `max |λ_i|` over the eigenvalues of `a`.
pub fn spectral_radius(a: &ComplexMatrix) -> Result<f64> {
    Ok(eigenvalues(a)?.iter().fold(0.0_f64, |m, z| m.max(z.norm())))
}
