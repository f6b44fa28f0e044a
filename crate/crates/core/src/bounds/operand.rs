use std::sync::OnceLock;

use crate::error::Result;
use crate::linop::{moduli, numerical_radius, operator_norm, ComplexMatrix, ModuliPair, RadiusResult};

/// A matrix together with lazily computed, cached spectral data.
///
/// The caches are write-once, so an `Operand` can be shared across threads.
#[derive(Debug)]
pub struct Operand {
    matrix: ComplexMatrix,
    rtol: f64,
    norm: OnceLock<f64>,
    radius: OnceLock<RadiusResult>,
    moduli: OnceLock<ModuliPair>,
}

impl Operand {
    pub fn new(matrix: ComplexMatrix, rtol: f64) -> Self {
        Self { matrix, rtol, norm: OnceLock::new(), radius: OnceLock::new(), moduli: OnceLock::new() }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn rtol(&self) -> f64 {
        self.rtol
    }

    pub fn norm(&self) -> f64 {
        *self.norm.get_or_init(|| operator_norm(&self.matrix))
    }

    /// `max(1, ‖A‖)`, the reference scale for relative comparisons.
    pub fn scale(&self) -> f64 {
        self.norm().max(1.0)
    }

    pub fn radius(&self) -> Result<&RadiusResult> {
        if let Some(r) = self.radius.get() {
            return Ok(r);
        }
        let r = numerical_radius(&self.matrix, self.rtol)?;
        Ok(self.radius.get_or_init(|| r))
    }

    /// `w(A)`, the certified lower value of the radius enclosure.
    pub fn w(&self) -> Result<f64> {
        Ok(self.radius()?.value)
    }

    pub fn moduli(&self) -> Result<&ModuliPair> {
        if let Some(m) = self.moduli.get() {
            return Ok(m);
        }
        let m = moduli(&self.matrix)?;
        Ok(self.moduli.get_or_init(|| m))
    }
}
