//! Numerical radius computations and a harness that evaluates, scans and
//! stress-tests upper bounds on the numerical radius of complex matrices.
//!
//! * [`linop`]: matrix algebra and the certified radius solver.
//! * [`bounds`]: the inequality registry and equality certificates.
//! * [`lab`]: ensembles, θ-scans, sweeps and counterexample search.

pub mod bounds;
pub mod error;
pub mod lab;
pub mod linop;
mod optim;

pub use num_complex::Complex64;

pub use bounds::{evaluate, BoundEvaluation, BoundId, BoundParams, EqualityCertificate, Evaluator};
pub use error::{Error, Result};
pub use linop::{ComplexMatrix, ModuliPair, RadiusResult};
