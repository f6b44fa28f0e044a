//! The inequality registry: one evaluation path that produces the left side,
//! right side, margin and verdict of every bound, plus the scalar-identity and
//! normality certificates used to study equality cases.

mod certificate;
mod operand;
mod params;
mod registry;

use std::sync::OnceLock;

use serde::Serialize;

pub use certificate::{
    block_cross_term, block_equality_certificate, equality_certificate_weighted, scalar_certificate,
    spectral_gap_certificate, weighted_cross_term, EqualityCertificate, RadiusGap, SCALAR_TOL,
};
pub use operand::Operand;
pub use params::BoundParams;
pub use registry::{BoundId, BoundStatus, LhsForm};

use crate::error::{Error, Result};
use crate::linop::{block_offdiag, numerical_radius, operator_norm, spectral_radius, ComplexMatrix, DEFAULT_RTOL};

/// Relative tolerance of the verdict: `satisfied ⇔ margin ≥ −1e-8·max(1, lhs, rhs)`.
pub const MARGIN_TOL: f64 = 1e-8;

/// One evaluated inequality instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEvaluation {
    pub bound: BoundId,
    pub params: BoundParams,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs − lhs`.
    pub margin: f64,
    pub satisfied: bool,
    pub tol_margin: f64,
    /// Hex digest of the operand entries and parameters.
    pub inputs_digest: String,
}

impl BoundEvaluation {
    fn new(bound: BoundId, params: BoundParams, lhs: f64, rhs: f64, digest: String) -> Self {
        let margin = rhs - lhs;
        let tol_margin = MARGIN_TOL * 1f64.max(lhs).max(rhs);
        Self { bound, params, lhs, rhs, margin, satisfied: margin >= -tol_margin, tol_margin, inputs_digest: digest }
    }
}

/// Evaluates bounds on a fixed pair of operands, caching radii, norms and
/// moduli across calls.
#[derive(Debug)]
pub struct Evaluator {
    a: Operand,
    b: Option<Operand>,
    rtol: f64,
    block: OnceLock<Operand>,
    block_sym: OnceLock<Operand>,
}

impl Evaluator {
    pub fn new(a: ComplexMatrix, b: Option<ComplexMatrix>, rtol: f64) -> Result<Self> {
        if let Some(b) = &b {
            if b.n() != a.n() {
                return Err(Error::DimensionMismatch { left: a.n(), right: b.n() });
            }
        }
        crate::error::check_param("rtol", rtol, rtol > 0.0, "tolerance must be positive")?;
        Ok(Self {
            a: Operand::new(a, rtol),
            b: b.map(|b| Operand::new(b, rtol)),
            rtol,
            block: OnceLock::new(),
            block_sym: OnceLock::new(),
        })
    }

    pub fn a(&self) -> &Operand {
        &self.a
    }

    pub fn b(&self) -> Option<&Operand> {
        self.b.as_ref()
    }

    fn b_for(&self, bound: BoundId) -> Result<&Operand> {
        self.b.as_ref().ok_or(Error::MissingOperand(bound.as_str()))
    }

    /// `T = [[0, A], [B, 0]]`.
    fn block(&self, bound: BoundId) -> Result<&Operand> {
        let b = self.b_for(bound)?;
        if let Some(t) = self.block.get() {
            return Ok(t);
        }
        let t = block_offdiag(self.a.matrix(), b.matrix())?;
        Ok(self.block.get_or_init(|| Operand::new(t, self.rtol)))
    }

    /// `T = [[0, A], [A, 0]]`.
    fn block_sym(&self) -> Result<&Operand> {
        if let Some(t) = self.block_sym.get() {
            return Ok(t);
        }
        let t = block_offdiag(self.a.matrix(), self.a.matrix())?;
        Ok(self.block_sym.get_or_init(|| Operand::new(t, self.rtol)))
    }

    /// The left-hand side in the bound's own convention.
    pub fn lhs(&self, bound: BoundId, params: BoundParams) -> Result<f64> {
        params.validate()?;
        let subject = match bound {
            BoundId::BlockWeighted | BoundId::BlockSpectral | BoundId::BlockHalfSum => self.block(bound)?,
            BoundId::BlockSymmetric => self.block_sym()?,
            _ => &self.a,
        };
        Ok(match bound.lhs_form() {
            LhsForm::Radius => subject.w()?,
            LhsForm::HalfNorm => subject.norm() / 2.0,
            LhsForm::Square => subject.w()?.powi(2),
            LhsForm::Power2r => subject.w()?.powf(2.0 * params.r),
        })
    }

    /// The right-hand side of the bound.
    pub fn rhs(&self, bound: BoundId, params: BoundParams) -> Result<f64> {
        params.validate()?;
        let a = &self.a;
        let r = params.r;
        Ok(match bound {
            BoundId::ClassicalUpper => a.norm(),
            BoundId::ClassicalLower => a.w()?,
            BoundId::Kittaneh => 0.5 * moduli_power_sum(&[a], 2.0)?,
            BoundId::BhuniaPaul => {
                let m = a.moduli()?;
                let x = m.abs_power(r)?.matmul(&m.abs_adjoint_power(r)?)?;
                0.25 * moduli_power_sum(&[a], 2.0 * r)? + 0.5 * self.w_of(&x)?
            }
            BoundId::WeightedMean | BoundId::WeightedMeanNorm => {
                let m = a.moduli()?;
                let x = m.abs_power(r * params.theta)?.matmul(&m.abs_adjoint_power(r * (1.0 - params.theta))?)?;
                let cross = if bound == BoundId::WeightedMean { self.w_of(&x)? } else { operator_norm(&x) };
                0.25 * moduli_power_sum(&[a], 2.0 * r)? + 0.5 * cross
            }
            BoundId::SpectralCross => {
                let m = a.moduli()?;
                let x = m.abs_power(r / 2.0)?.matmul(&m.abs_adjoint_power(r / 2.0)?)?;
                0.25 * moduli_power_sum(&[a], 2.0 * r)? + 0.5 * spectral_radius(&x)?
            }
            BoundId::NormPowerMix => {
                let sq = a.matrix().matmul(a.matrix())?;
                0.5 * (a.norm() + operator_norm(&sq).sqrt())
            }
            BoundId::BlockWeighted | BoundId::BlockSpectral => {
                let b = self.b_for(bound)?;
                let x = a.moduli()?.abs_power(r / 2.0)?.matmul(&b.moduli()?.abs_adjoint_power(r / 2.0)?)?;
                let cross = if bound == BoundId::BlockWeighted { self.w_of(&x)? } else { spectral_radius(&x)? };
                0.25 * moduli_power_sum(&[a, b], 2.0 * r)? + 0.5 * cross
            }
            BoundId::BlockSymmetric => {
                let x = a.moduli()?.abs_power(r)?;
                0.5 * moduli_power_sum(&[a], 2.0 * r)? + 0.5 * self.w_of(&x)?
            }
            BoundId::BlockHalfSum => 0.5 * (a.norm() + self.b_for(bound)?.norm()),
        })
    }

    /// Evaluates `bound`; single-operand bounds ignore a supplied `B`.
    pub fn evaluate(&self, bound: BoundId, params: BoundParams) -> Result<BoundEvaluation> {
        if bound.needs_second_operand() {
            self.b_for(bound)?;
        }
        let lhs = self.lhs(bound, params)?;
        let rhs = self.rhs(bound, params)?;
        Ok(BoundEvaluation::new(bound, params, lhs, rhs, self.digest(params)))
    }

    fn w_of(&self, x: &ComplexMatrix) -> Result<f64> {
        Ok(numerical_radius(x, self.rtol)?.value)
    }

    fn digest(&self, params: BoundParams) -> String {
        let mut h = Fnv64::default();
        for op in std::iter::once(&self.a).chain(self.b.as_ref()) {
            h.write(&(op.matrix().n() as u64).to_le_bytes());
            for z in op.matrix().as_matrix().iter() {
                h.write(&z.re.to_bits().to_le_bytes());
                h.write(&z.im.to_bits().to_le_bytes());
            }
        }
        h.write(&params.r.to_bits().to_le_bytes());
        h.write(&params.theta.to_bits().to_le_bytes());
        format!("{:016x}", h.0)
    }
}

/// `‖Σ (|X|^s + |X*|^s)‖` over the given operands.
fn moduli_power_sum(ops: &[&Operand], s: f64) -> Result<f64> {
    let mut acc: Option<ComplexMatrix> = None;
    for op in ops {
        let m = op.moduli()?;
        let term = m.abs_power(s)?.add(&m.abs_adjoint_power(s)?)?;
        acc = Some(match acc {
            Some(prev) => prev.add(&term)?,
            None => term,
        });
    }
    Ok(acc.map(|m| operator_norm(&m)).unwrap_or(0.0))
}

struct Fnv64(u64);

impl Default for Fnv64 {
    fn default() -> Self {
        Fnv64(0xcbf2_9ce4_8422_2325)
    }
}

impl Fnv64 {
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= u64::from(b);
            self.0 = self.0.wrapping_mul(0x0100_0000_01b3);
        }
    }
}

/// Evaluates a single bound with the default radius tolerance.
///
/// `b` must be present exactly when [`BoundId::needs_second_operand`] holds.
pub fn evaluate(
    bound: BoundId,
    a: &ComplexMatrix,
    b: Option<&ComplexMatrix>,
    params: BoundParams,
) -> Result<BoundEvaluation> {
    if b.is_some() && !bound.needs_second_operand() {
        return Err(Error::UnexpectedOperand(bound.as_str()));
    }
    Evaluator::new(a.clone(), b.cloned(), DEFAULT_RTOL)?.evaluate(bound, params)
}

fn rhs_single(bound: BoundId, a: &ComplexMatrix, params: BoundParams) -> Result<f64> {
    Evaluator::new(a.clone(), None, DEFAULT_RTOL)?.rhs(bound, params)
}

fn rhs_pair(bound: BoundId, a: &ComplexMatrix, b: &ComplexMatrix, params: BoundParams) -> Result<f64> {
    Evaluator::new(a.clone(), Some(b.clone()), DEFAULT_RTOL)?.rhs(bound, params)
}

/// `¼‖|A|^{2r}+|A*|^{2r}‖ + ½ w(|A|^{rθ}|A*|^{r(1−θ)})`.
pub fn rhs_weighted_thm21(a: &ComplexMatrix, r: f64, theta: f64) -> Result<f64> {
    rhs_single(BoundId::WeightedMean, a, BoundParams::new(r, theta)?)
}

/// `¼‖|A|^{2r}+|A*|^{2r}‖ + ½ ‖|A|^{rθ}|A*|^{r(1−θ)}‖`.
pub fn rhs_weighted_norm_cor23(a: &ComplexMatrix, r: f64, theta: f64) -> Result<f64> {
    rhs_single(BoundId::WeightedMeanNorm, a, BoundParams::new(r, theta)?)
}

/// `¼‖|A|^{2r}+|A*|^{2r}‖ + ½ w(|A|^r|A*|^r)`.
pub fn rhs_bhunia_paul_eq3(a: &ComplexMatrix, r: f64) -> Result<f64> {
    rhs_single(BoundId::BhuniaPaul, a, BoundParams::with_r(r)?)
}

/// `½‖|A|²+|A*|²‖`, compared against `w(A)²`.
pub fn rhs_kittaneh_eq2(a: &ComplexMatrix) -> Result<f64> {
    rhs_single(BoundId::Kittaneh, a, BoundParams::default())
}

/// `¼‖|A|^{2r}+|A*|^{2r}‖ + ½ ρ(|A|^{r/2}|A*|^{r/2})`.
pub fn rhs_spectral_thm31(a: &ComplexMatrix, r: f64) -> Result<f64> {
    rhs_single(BoundId::SpectralCross, a, BoundParams::with_r(r)?)
}

/// `½(‖A‖ + ‖A²‖^{1/2})`, compared against `w(A)`.
pub fn rhs_classical_mix_cor34(a: &ComplexMatrix) -> Result<f64> {
    rhs_single(BoundId::NormPowerMix, a, BoundParams::default())
}

/// `¼‖|A|^{2r}+|A*|^{2r}+|B|^{2r}+|B*|^{2r}‖ + ½ w(|A|^{r/2}|B*|^{r/2})`.
pub fn rhs_block_thm41(a: &ComplexMatrix, b: &ComplexMatrix, r: f64) -> Result<f64> {
    rhs_pair(BoundId::BlockWeighted, a, b, BoundParams::with_r(r)?)
}

/// `½‖|A|^{2r}+|A*|^{2r}‖ + ½ w(|A|^r)`, compared against `w([[0,A],[A,0]])^{2r}`.
pub fn rhs_block_sym_cor42(a: &ComplexMatrix, r: f64) -> Result<f64> {
    rhs_single(BoundId::BlockSymmetric, a, BoundParams::with_r(r)?)
}

/// [`rhs_block_thm41`] with the cross-term radius replaced by the spectral radius.
pub fn rhs_block_spectral_thm43(a: &ComplexMatrix, b: &ComplexMatrix, r: f64) -> Result<f64> {
    rhs_pair(BoundId::BlockSpectral, a, b, BoundParams::with_r(r)?)
}

/// `½(‖A‖ + ‖B‖)`, compared against `w([[0,A],[B,0]])`.
pub fn rhs_block_halfsum_cor45(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    rhs_pair(BoundId::BlockHalfSum, a, b, BoundParams::default())
}

#[cfg(test)]
mod tests;
