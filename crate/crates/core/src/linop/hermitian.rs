use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use super::matrix::{adjoint, ComplexMatrix};
use crate::error::{check_param, Error, Result};

/// Tolerance on negative eigenvalues of nominally positive semidefinite input,
/// relative to the spectral norm.
pub const PSD_CLAMP_TOL: f64 = 1e-10;

/// Tolerance on the Hermitian defect of nominally Hermitian input, relative to
/// the spectral norm.
pub const HERMITIAN_TOL: f64 = 1e-10;

const EIG_EPS: f64 = f64::EPSILON;
const EIG_MAX_ITER: usize = 10_000;

/// Eigendecomposition `H = V diag(λ) V*` of a Hermitian matrix, eigenvalues ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianEig {
    eigenvalues: Vec<f64>,
    eigenvectors: DMatrix<Complex64>,
}

impl HermitianEig {
    /// Decomposes the Hermitian part `(H + H*)/2` of `h`.
    pub fn new(h: &ComplexMatrix) -> Result<Self> {
        let m = h.as_matrix();
        let sym = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
        let eig =
            SymmetricEigen::try_new(sym, EIG_EPS, EIG_MAX_ITER).ok_or(Error::NoConvergence("Hermitian eigensolver"))?;
        let n = h.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
        let eigenvalues = order.iter().map(|&i| eig.eigenvalues[i]).collect();
        let eigenvectors = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
        Ok(Self { eigenvalues, eigenvectors })
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Unitary matrix whose columns are the eigenvectors.
    pub fn eigenvectors(&self) -> &DMatrix<Complex64> {
        &self.eigenvectors
    }

    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Largest eigenvalue magnitude, the spectral norm of the decomposed matrix.
    pub fn spectral_norm(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// Functional calculus: `V diag(f(λ)) V*`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let v = &self.eigenvectors;
        let d = DVector::from_iterator(self.n(), self.eigenvalues.iter().map(|&l| Complex64::new(f(l), 0.0)));
        let mut scaled = v.clone();
        for (j, mut col) in scaled.column_iter_mut().enumerate() {
            col *= d[j];
        }
        ComplexMatrix::from_trusted(scaled * v.adjoint())
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map(|l| l)
    }

    /// Same eigenvectors, eigenvalues replaced by `f(λ)` (kept ascending when `f` is monotone).
    pub(crate) fn with_eigenvalues(&self, f: impl Fn(f64) -> f64) -> HermitianEig {
        HermitianEig {
            eigenvalues: self.eigenvalues.iter().map(|&l| f(l)).collect(),
            eigenvectors: self.eigenvectors.clone(),
        }
    }

    /// Clamps the spectrum of a nominally positive semidefinite matrix.
    ///
    /// Eigenvalues in `[-tol·‖H‖, 0)` become 0; anything more negative is an
    /// error. Eigenvalues at rounding level, `|λ| ≤ n·ε·‖H‖`, also snap to 0 so
    /// that fractional powers of singular matrices do not amplify noise.
    pub(crate) fn clamp_psd(mut self, tol: f64) -> Result<Self> {
        let norm = self.spectral_norm();
        let allowed = tol * norm;
        let noise = self.n() as f64 * f64::EPSILON * norm;
        for l in &mut self.eigenvalues {
            if *l < -allowed {
                return Err(Error::NotPositiveSemidefinite { eigenvalue: *l, allowed });
            }
            if *l <= noise {
                *l = 0.0;
            }
        }
        Ok(self)
    }

    /// `P^s` for a clamped PSD spectrum, with `0^0 = 1`.
    pub(crate) fn psd_power(&self, s: f64) -> ComplexMatrix {
        self.map(|l| if s == 0.0 { 1.0 } else { l.powf(s) })
    }
}

/// Eigenvalues (ascending) of the Hermitian part of `h`, without eigenvectors.
pub(crate) fn hermitian_eigenvalues(h: &DMatrix<Complex64>) -> Vec<f64> {
    let mut vals: Vec<f64> = h.symmetric_eigenvalues().iter().copied().collect();
    vals.sort_by(f64::total_cmp);
    vals
}

/// Fractional power `P^s` of a positive semidefinite matrix.
///
/// Requires `P` Hermitian within `1e-10·‖P‖` and eigenvalues no lower than
/// `-1e-10·‖P‖`; `s` must be a finite nonnegative real. `P^0 = I`.
pub fn psd_power(p: &ComplexMatrix, s: f64) -> Result<ComplexMatrix> {
    check_param("s", s, s >= 0.0, "exponent must be nonnegative")?;
    let eig = psd_eig(p)?;
    Ok(eig.psd_power(s))
}

/// Validated, clamped eigendecomposition of a positive semidefinite matrix.
pub fn psd_eig(p: &ComplexMatrix) -> Result<HermitianEig> {
    let eig = HermitianEig::new(p)?;
    let allowed = HERMITIAN_TOL * eig.spectral_norm();
    let deviation = p.sub(&adjoint(p))?.frobenius_norm() * 0.5;
    if deviation > allowed {
        return Err(Error::NotHermitian { deviation, allowed });
    }
    eig.clamp_psd(PSD_CLAMP_TOL)
}

/// The pair of operator moduli `|A| = (A*A)^{1/2}` and `|A*| = (AA*)^{1/2}`,
/// with their eigendecompositions cached for functional calculus.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuliPair {
    abs_a: ComplexMatrix,
    abs_a_star: ComplexMatrix,
    eig_a: HermitianEig,
    eig_a_star: HermitianEig,
}

impl ModuliPair {
    /// `|A|`.
    pub fn abs(&self) -> &ComplexMatrix {
        &self.abs_a
    }

    /// `|A*|`.
    pub fn abs_adjoint(&self) -> &ComplexMatrix {
        &self.abs_a_star
    }

    pub fn eig_abs(&self) -> &HermitianEig {
        &self.eig_a
    }

    pub fn eig_abs_adjoint(&self) -> &HermitianEig {
        &self.eig_a_star
    }

    /// `|A|^s`, computed from the cached eigendecomposition.
    pub fn abs_power(&self, s: f64) -> Result<ComplexMatrix> {
        check_param("s", s, s >= 0.0, "exponent must be nonnegative")?;
        Ok(self.eig_a.psd_power(s))
    }

    /// `|A*|^s`, computed from the cached eigendecomposition.
    pub fn abs_adjoint_power(&self, s: f64) -> Result<ComplexMatrix> {
        check_param("s", s, s >= 0.0, "exponent must be nonnegative")?;
        Ok(self.eig_a_star.psd_power(s))
    }
}

/// Computes `|A|` and `|A*|` from Hermitian eigendecompositions of the Gram
/// matrices `A*A` and `AA*`.
pub fn moduli(a: &ComplexMatrix) -> Result<ModuliPair> {
    let a_star = adjoint(a);
    let gram = a_star.matmul(a)?;
    let gram_star = a.matmul(&a_star)?;
    let eig_a = gram_sqrt(&gram)?;
    let eig_a_star = gram_sqrt(&gram_star)?;
    Ok(ModuliPair { abs_a: eig_a.reconstruct(), abs_a_star: eig_a_star.reconstruct(), eig_a, eig_a_star })
}

fn gram_sqrt(gram: &ComplexMatrix) -> Result<HermitianEig> {
    let eig = HermitianEig::new(gram)?.clamp_psd(PSD_CLAMP_TOL)?;
    Ok(eig.with_eigenvalues(f64::sqrt))
}
