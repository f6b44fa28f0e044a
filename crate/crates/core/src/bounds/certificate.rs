use num_complex::Complex64;
use serde::Serialize;

use super::params::BoundParams;
use crate::error::Result;
use crate::linop::{adjoint, moduli, numerical_radius, operator_norm, spectral_radius, ComplexMatrix, DEFAULT_RTOL};

/// Relative tolerance for the scalar-identity verdict.
pub const SCALAR_TOL: f64 = 1e-8;

/// Outcome of testing whether a cross term `X` is a scalar multiple of `I`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EqualityCertificate {
    /// `λ = Re tr(X)/n`, the Frobenius-optimal scalar (nonnegative for products of PSD factors).
    pub scalar_lambda: f64,
    /// `‖X − λI‖`.
    pub residual: f64,
    /// `residual ≤ 1e-8·max(1, ‖X‖)`.
    pub is_scalar_multiple_of_identity: bool,
    /// `‖XX* − X*X‖`.
    pub normality_residual: f64,
}

/// Builds the certificate for an arbitrary square matrix.
pub fn scalar_certificate(x: &ComplexMatrix) -> EqualityCertificate {
    let n = x.n();
    let lambda = (x.trace().re / n as f64).max(0.0);
    let shifted = x.sub(&ComplexMatrix::identity(n).expect("n > 0").scale(Complex64::new(lambda, 0.0)));
    let residual = operator_norm(&shifted.expect("same dimension"));
    let xs = adjoint(x);
    let comm = x.matmul(&xs).and_then(|p| p.sub(&xs.matmul(x)?)).expect("same dimension");
    EqualityCertificate {
        scalar_lambda: lambda,
        residual,
        is_scalar_multiple_of_identity: residual <= SCALAR_TOL * operator_norm(x).max(1.0),
        normality_residual: operator_norm(&comm),
    }
}

/// `|A|^{rθ} |A*|^{r(1−θ)}`, the weighted cross term.
pub fn weighted_cross_term(a: &ComplexMatrix, r: f64, theta: f64) -> Result<ComplexMatrix> {
    let p = BoundParams::new(r, theta)?;
    let m = moduli(a)?;
    m.abs_power(p.r * p.theta)?.matmul(&m.abs_adjoint_power(p.r * (1.0 - p.theta))?)
}

/// `|A|^{r/2} |B*|^{r/2}`, the block cross term.
pub fn block_cross_term(a: &ComplexMatrix, b: &ComplexMatrix, r: f64) -> Result<ComplexMatrix> {
    let p = BoundParams::new(r, 0.5)?;
    let ma = moduli(a)?;
    let mb = moduli(b)?;
    ma.abs_power(p.r / 2.0)?.matmul(&mb.abs_adjoint_power(p.r / 2.0)?)
}

/// Tests whether `|A|^{rθ}|A*|^{r(1−θ)}` is a scalar multiple of the identity.
pub fn equality_certificate_weighted(a: &ComplexMatrix, r: f64, theta: f64) -> Result<EqualityCertificate> {
    Ok(scalar_certificate(&weighted_cross_term(a, r, theta)?))
}

/// Tests whether `|A|^{r/2}|B*|^{r/2}` is a scalar multiple `μI` of the identity.
pub fn block_equality_certificate(a: &ComplexMatrix, b: &ComplexMatrix, r: f64) -> Result<EqualityCertificate> {
    Ok(scalar_certificate(&block_cross_term(a, b, r)?))
}

/// Spectral radius against numerical radius of `X = |A|^{r/2}|A*|^{r/2}`,
/// reported next to the normality defect of `X`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusGap {
    pub spectral_radius: f64,
    pub numerical_radius: f64,
    /// `w(X) − ρ(X)`, nonnegative up to rounding.
    pub gap: f64,
    pub normality_residual: f64,
}

pub fn spectral_gap_certificate(a: &ComplexMatrix, r: f64) -> Result<RadiusGap> {
    let x = weighted_cross_term(a, r, 0.5)?;
    let rho = spectral_radius(&x)?;
    let w = numerical_radius(&x, DEFAULT_RTOL)?.value;
    Ok(RadiusGap {
        spectral_radius: rho,
        numerical_radius: w,
        gap: w - rho,
        normality_residual: scalar_certificate(&x).normality_residual,
    })
}
