use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Every inequality known to the registry, addressed by a stable lowercase tag.
///
/// Operands: `A` always; `B` for the two-operand block bounds. `T` is the
/// block operator `[[0, A], [B, 0]]` (with `B = A` for [`BoundId::BlockSymmetric`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BoundId {
    /// `w(A) ≤ ‖A‖`.
    #[serde(rename = "classical_upper")]
    ClassicalUpper,
    /// `‖A‖/2 ≤ w(A)`.
    #[serde(rename = "classical_lower")]
    ClassicalLower,
    /// `w²(A) ≤ ½‖|A|² + |A*|²‖`.
    #[serde(rename = "kittaneh_eq2")]
    Kittaneh,
    /// `w^{2r}(A) ≤ ¼‖|A|^{2r} + |A*|^{2r}‖ + ½ w(|A|^r |A*|^r)`.
    #[serde(rename = "bhunia_paul_eq3")]
    BhuniaPaul,
    /// `w^{2r}(A) ≤ ¼‖|A|^{2r} + |A*|^{2r}‖ + ½ w(|A|^{rθ} |A*|^{r(1−θ)})`.
    #[serde(rename = "weighted_thm21")]
    WeightedMean,
    /// The weighted-mean bound with the cross-term radius replaced by its norm.
    #[serde(rename = "weighted_norm_cor23")]
    WeightedMeanNorm,
    /// `w^{2r}(A) ≤ ¼‖|A|^{2r} + |A*|^{2r}‖ + ½ ρ(|A|^{r/2} |A*|^{r/2})`.
    #[serde(rename = "spectral_thm31")]
    SpectralCross,
    /// `w(A) ≤ ½(‖A‖ + ‖A²‖^{1/2})`.
    #[serde(rename = "classical_mix_cor34")]
    NormPowerMix,
    /// `w^{2r}(T) ≤ ¼‖|A|^{2r} + |A*|^{2r} + |B|^{2r} + |B*|^{2r}‖ + ½ w(|A|^{r/2} |B*|^{r/2})`.
    #[serde(rename = "block_thm41")]
    BlockWeighted,
    /// `w^{2r}(T) ≤ ½‖|A|^{2r} + |A*|^{2r}‖ + ½ w(|A|^r)` for `T = [[0, A], [A, 0]]`.
    #[serde(rename = "block_sym_cor42")]
    BlockSymmetric,
    /// [`BoundId::BlockWeighted`] with the cross-term radius replaced by the spectral radius.
    #[serde(rename = "block_spectral_thm43")]
    BlockSpectral,
    /// `w(T) ≤ ½(‖A‖ + ‖B‖)`.
    #[serde(rename = "block_halfsum_cor45")]
    BlockHalfSum,
}

/// Whether a bound is an established result or a claim under test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundStatus {
    Established,
    Hypothesis,
}

/// Which power of the numerical radius forms the left-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LhsForm {
    /// `w`.
    Radius,
    /// `‖·‖/2` on the left, `w` on the right.
    HalfNorm,
    /// `w²`.
    Square,
    /// `w^{2r}`.
    Power2r,
}

impl BoundId {
    pub const ALL: [BoundId; 12] = [
        BoundId::ClassicalUpper,
        BoundId::ClassicalLower,
        BoundId::Kittaneh,
        BoundId::BhuniaPaul,
        BoundId::WeightedMean,
        BoundId::WeightedMeanNorm,
        BoundId::SpectralCross,
        BoundId::NormPowerMix,
        BoundId::BlockWeighted,
        BoundId::BlockSymmetric,
        BoundId::BlockSpectral,
        BoundId::BlockHalfSum,
    ];

    /// Bounds that are published, proof-checked results; a violation of one
    /// of these indicates a numerical defect, not a finding.
    pub const ESTABLISHED: [BoundId; 6] = [
        BoundId::ClassicalUpper,
        BoundId::ClassicalLower,
        BoundId::Kittaneh,
        BoundId::BhuniaPaul,
        BoundId::NormPowerMix,
        BoundId::BlockHalfSum,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::ClassicalUpper => "classical_upper",
            BoundId::ClassicalLower => "classical_lower",
            BoundId::Kittaneh => "kittaneh_eq2",
            BoundId::BhuniaPaul => "bhunia_paul_eq3",
            BoundId::WeightedMean => "weighted_thm21",
            BoundId::WeightedMeanNorm => "weighted_norm_cor23",
            BoundId::SpectralCross => "spectral_thm31",
            BoundId::NormPowerMix => "classical_mix_cor34",
            BoundId::BlockWeighted => "block_thm41",
            BoundId::BlockSymmetric => "block_sym_cor42",
            BoundId::BlockSpectral => "block_spectral_thm43",
            BoundId::BlockHalfSum => "block_halfsum_cor45",
        }
    }

    pub fn status(self) -> BoundStatus {
        if Self::ESTABLISHED.contains(&self) {
            BoundStatus::Established
        } else {
            BoundStatus::Hypothesis
        }
    }

    /// True when the bound needs a second operand `B`.
    pub fn needs_second_operand(self) -> bool {
        matches!(self, BoundId::BlockWeighted | BoundId::BlockSpectral | BoundId::BlockHalfSum)
    }

    /// True when the left-hand side is taken over the block operator `T`.
    pub fn is_block(self) -> bool {
        matches!(
            self,
            BoundId::BlockWeighted | BoundId::BlockSymmetric | BoundId::BlockSpectral | BoundId::BlockHalfSum
        )
    }

    /// True when `θ` enters the right-hand side.
    pub fn uses_theta(self) -> bool {
        matches!(self, BoundId::WeightedMean | BoundId::WeightedMeanNorm)
    }

    pub fn lhs_form(self) -> LhsForm {
        match self {
            BoundId::ClassicalUpper | BoundId::NormPowerMix | BoundId::BlockHalfSum => LhsForm::Radius,
            BoundId::ClassicalLower => LhsForm::HalfNorm,
            BoundId::Kittaneh => LhsForm::Square,
            _ => LhsForm::Power2r,
        }
    }

    /// Homogeneity degree of the left-hand side under `A ↦ cA`.
    pub fn lhs_degree(self, r: f64) -> f64 {
        match self.lhs_form() {
            LhsForm::Radius | LhsForm::HalfNorm => 1.0,
            LhsForm::Square => 2.0,
            LhsForm::Power2r => 2.0 * r,
        }
    }

    /// True when both sides share the same homogeneity degree, so that
    /// rescaling the operands rescales the margin without changing the verdict.
    pub fn is_homogeneous(self) -> bool {
        matches!(
            self,
            BoundId::ClassicalUpper
                | BoundId::ClassicalLower
                | BoundId::Kittaneh
                | BoundId::BhuniaPaul
                | BoundId::NormPowerMix
                | BoundId::BlockHalfSum
        )
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoundId::ALL.into_iter().find(|b| b.as_str() == s).ok_or_else(|| Error::UnknownBound(s.to_owned()))
    }
}
