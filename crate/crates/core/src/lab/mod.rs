//! Experiments: seeded matrix ensembles, θ-scans and minimization, factorial
//! sweeps, counterexample search, and recomputation of the worked examples.

mod ensemble;
mod reproduce;
mod scan;
mod sweep;

pub use ensemble::{companion_seed, gen_matrix, mix64, trial_seed, EnsembleKind, EnsembleSpec};
pub use reproduce::{
    reproduce_examples, Agreement, ExampleReport, ExampleRow, BLOCK_JORDAN, DIAGONAL, JORDAN_THREE, JORDAN_TWO,
    NILPOTENT_ONE, NILPOTENT_TWO,
};
pub use scan::{
    equality_theta_set, equality_theta_set_on, theta_grid, theta_minimize, theta_minimize_on, theta_scan,
    theta_scan_on, ThetaMinimum, ThetaScan, MINIMIZE_GRID,
};
pub use sweep::{falsify, sweep, BoundSummary, Counterexample, ExperimentConfig, Report, TrialRecord, SWEEP_RTOL};
