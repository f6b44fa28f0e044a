//! Dense complex matrix algebra: moduli, fractional powers, norms, spectral
//! radius, and a certified numerical-radius solver.

mod hermitian;
mod matrix;
mod norms;
mod oracle;
mod radius;

pub use hermitian::{moduli, psd_eig, psd_power, HermitianEig, ModuliPair, HERMITIAN_TOL, PSD_CLAMP_TOL};
pub use matrix::{adjoint, block_offdiag, rotated_hermitian_part, ComplexMatrix};
pub use norms::{eigenvalues, operator_norm, spectral_radius};
pub use oracle::numerical_radius_2x2_oracle;
pub use radius::{coarse_grid_size, numerical_radius, RadiusResult, DEFAULT_RTOL, MAX_GRID, MIN_GRID, REFINE_WIDTH};
