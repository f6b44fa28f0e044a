#![allow(dead_code)]

use nalgebra::DMatrix;
use numrad_core::lab::{gen_matrix, EnsembleKind, EnsembleSpec};
use numrad_core::{Complex64, ComplexMatrix};

pub fn draw(kind: EnsembleKind, n: usize, seed: u64) -> ComplexMatrix {
    gen_matrix(&EnsembleSpec { kind, n, seed }).unwrap()
}

pub fn ginibre(n: usize, seed: u64) -> ComplexMatrix {
    draw(EnsembleKind::Ginibre, n, seed)
}

/// Haar-like unitary: Q factor of a Ginibre draw.
pub fn unitary(n: usize, seed: u64) -> ComplexMatrix {
    let g = ginibre(n, seed).into_inner();
    ComplexMatrix::new(g.qr().q()).unwrap()
}

/// Random positive semidefinite `G G*`, optionally rank deficient.
pub fn psd(n: usize, rank: usize, seed: u64) -> ComplexMatrix {
    let g = ginibre(n, seed).into_inner();
    let mut g = g.columns(0, rank.min(n)).into_owned();
    g *= Complex64::new(2.0, 0.0);
    ComplexMatrix::new(&g * g.adjoint()).unwrap()
}

pub fn dense(rows: &DMatrix<Complex64>) -> ComplexMatrix {
    ComplexMatrix::new(rows.clone()).unwrap()
}
