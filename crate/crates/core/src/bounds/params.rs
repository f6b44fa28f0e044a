use serde::{Deserialize, Serialize};

use crate::error::{check_param, Result};

/// Power `r ≥ 1` and weight `θ ∈ [0, 1]` of a bound instance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundParams {
    pub r: f64,
    pub theta: f64,
}

impl BoundParams {
    pub fn new(r: f64, theta: f64) -> Result<Self> {
        check_param("r", r, r >= 1.0, "power must be at least 1")?;
        check_param("theta", theta, (0.0..=1.0).contains(&theta), "weight must lie in [0, 1]")?;
        Ok(Self { r, theta })
    }

    pub fn with_r(r: f64) -> Result<Self> {
        Self::new(r, 0.5)
    }

    pub(crate) fn validate(&self) -> Result<()> {
        Self::new(self.r, self.theta).map(|_| ())
    }
}

impl Default for BoundParams {
    fn default() -> Self {
        Self { r: 1.0, theta: 0.5 }
    }
}
