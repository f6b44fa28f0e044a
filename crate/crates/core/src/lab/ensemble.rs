use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linop::ComplexMatrix;

/// Random (or fixed) matrix families used as test inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnsembleKind {
    /// Independent complex Gaussian entries, real and imaginary parts `N(0, 1/(2n))`.
    Ginibre,
    /// `U diag(λ) U*` with `U` the QR factor of a Ginibre draw and standard complex Gaussian `λ`.
    Normal,
    /// Ones on the superdiagonal; no randomness.
    NilpotentJordan,
    /// `αI + J` with `J` the nilpotent Jordan block and `α` uniform on the unit disk.
    ShiftedJordan,
    /// Ginibre draw with the strict lower triangle zeroed.
    UpperTriangular,
}

impl EnsembleKind {
    pub const ALL: [EnsembleKind; 5] = [
        EnsembleKind::Ginibre,
        EnsembleKind::Normal,
        EnsembleKind::NilpotentJordan,
        EnsembleKind::ShiftedJordan,
        EnsembleKind::UpperTriangular,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EnsembleKind::Ginibre => "ginibre",
            EnsembleKind::Normal => "normal",
            EnsembleKind::NilpotentJordan => "nilpotent_jordan",
            EnsembleKind::ShiftedJordan => "shifted_jordan",
            EnsembleKind::UpperTriangular => "upper_triangular",
        }
    }
}

impl fmt::Display for EnsembleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EnsembleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EnsembleKind::ALL.into_iter().find(|k| k.as_str() == s).ok_or_else(|| Error::UnknownEnsemble(s.to_owned()))
    }
}

/// A fully specified draw: family, dimension and seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub kind: EnsembleKind,
    pub n: usize,
    pub seed: u64,
}

/// SplitMix64 finalizer.
pub fn mix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of one trial: `mix(mix(mix(base) ^ dim) ^ trial)`.
///
/// Depends only on its arguments, so serial and parallel sweeps draw the
/// same matrices.
pub fn trial_seed(base_seed: u64, dim: usize, trial: usize) -> u64 {
    mix64(mix64(mix64(base_seed) ^ dim as u64) ^ trial as u64)
}

/// Seed of the second operand of a trial, derived from the first.
pub fn companion_seed(seed: u64) -> u64 {
    mix64(seed ^ 0x5851_f42d_4c95_7f2d)
}

fn complex_normal(rng: &mut ChaCha8Rng, sigma: f64) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re * sigma, im * sigma)
}

fn ginibre(rng: &mut ChaCha8Rng, n: usize) -> DMatrix<Complex64> {
    let sigma = 1.0 / (2.0 * n as f64).sqrt();
    // Row-major fill so the draw order does not depend on storage layout.
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = complex_normal(rng, sigma);
        }
    }
    m
}

fn jordan(n: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(n, n, |i, j| if j == i + 1 { Complex64::ONE } else { Complex64::ZERO })
}

/// Draws the matrix described by `spec`; identical specs give identical matrices.
pub fn gen_matrix(spec: &EnsembleSpec) -> Result<ComplexMatrix> {
    let n = spec.n;
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let m = match spec.kind {
        EnsembleKind::Ginibre => ginibre(&mut rng, n),
        EnsembleKind::Normal => {
            let q = ginibre(&mut rng, n).qr().q();
            let spectrum: Vec<Complex64> =
                (0..n).map(|_| complex_normal(&mut rng, std::f64::consts::FRAC_1_SQRT_2)).collect();
            let mut qd = q.clone();
            for (j, mut col) in qd.column_iter_mut().enumerate() {
                col *= spectrum[j];
            }
            qd * q.adjoint()
        }
        EnsembleKind::NilpotentJordan => jordan(n),
        EnsembleKind::ShiftedJordan => {
            let radius = rng.random::<f64>().sqrt();
            let angle = rng.random::<f64>() * std::f64::consts::TAU;
            let alpha = Complex64::from_polar(radius, angle);
            jordan(n) + DMatrix::identity(n, n) * alpha
        }
        EnsembleKind::UpperTriangular => {
            let mut g = ginibre(&mut rng, n);
            for j in 0..n {
                for i in j + 1..n {
                    g[(i, j)] = Complex64::ZERO;
                }
            }
            g
        }
    };
    ComplexMatrix::new(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::scalar_certificate;
    use crate::linop::operator_norm;

    #[test]
    fn nilpotent_jordan_is_fixed() {
        let a = gen_matrix(&EnsembleSpec { kind: EnsembleKind::NilpotentJordan, n: 2, seed: 7 }).unwrap();
        assert_eq!(a, ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap());
        let b = gen_matrix(&EnsembleSpec { kind: EnsembleKind::NilpotentJordan, n: 2, seed: 99 }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn same_seed_same_matrix() {
        for kind in EnsembleKind::ALL {
            let spec = EnsembleSpec { kind, n: 4, seed: 1234 };
            assert_eq!(gen_matrix(&spec).unwrap(), gen_matrix(&spec).unwrap(), "{kind}");
        }
        let a = gen_matrix(&EnsembleSpec { kind: EnsembleKind::Ginibre, n: 3, seed: 1 }).unwrap();
        let b = gen_matrix(&EnsembleSpec { kind: EnsembleKind::Ginibre, n: 3, seed: 2 }).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn normal_kind_is_normal() {
        for seed in 0..20 {
            let a = gen_matrix(&EnsembleSpec { kind: EnsembleKind::Normal, n: 5, seed }).unwrap();
            let cert = scalar_certificate(&a);
            assert!(cert.normality_residual <= 1e-10 * operator_norm(&a), "seed {seed}");
        }
    }

    #[test]
    fn structural_shapes() {
        let u = gen_matrix(&EnsembleSpec { kind: EnsembleKind::UpperTriangular, n: 4, seed: 3 }).unwrap();
        for i in 0..4 {
            for j in 0..i {
                assert_eq!(u.get(i, j), Complex64::ZERO);
            }
        }
        let s = gen_matrix(&EnsembleSpec { kind: EnsembleKind::ShiftedJordan, n: 3, seed: 3 }).unwrap();
        let alpha = s.get(0, 0);
        assert!(alpha.norm() <= 1.0);
        assert_eq!(s.get(1, 1), alpha);
        assert_eq!(s.get(0, 1), Complex64::ONE);
        assert_eq!(s.get(1, 0), Complex64::ZERO);
    }

    #[test]
    fn kinds_parse() {
        for k in EnsembleKind::ALL {
            assert_eq!(k.as_str().parse::<EnsembleKind>().unwrap(), k);
        }
        assert!("gue".parse::<EnsembleKind>().is_err());
        assert!(gen_matrix(&EnsembleSpec { kind: EnsembleKind::Ginibre, n: 0, seed: 0 }).is_err());
    }

    #[test]
    fn seeds_are_distinct() {
        let mut seen = std::collections::HashSet::new();
        for dim in 1..6 {
            for trial in 0..200 {
                assert!(seen.insert(trial_seed(42, dim, trial)));
            }
        }
        assert_ne!(trial_seed(1, 2, 3), trial_seed(2, 2, 3));
    }
}
