use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// A dense, square, finite complex matrix.
///
/// Construction validates the shape and the entries, so every value of this
/// type is a legal operand for the kernels in [`crate::linop`].
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix(DMatrix<Complex64>);

impl ComplexMatrix {
    pub fn new(m: DMatrix<Complex64>) -> Result<Self> {
        let (rows, cols) = m.shape();
        if rows == 0 || cols == 0 {
            return Err(Error::Empty);
        }
        if rows != cols {
            return Err(Error::NotSquare { rows, cols });
        }
        for j in 0..cols {
            for i in 0..rows {
                let z = m[(i, j)];
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(Self(m))
    }

    /// Wraps a matrix produced by arithmetic on already-validated operands.
    pub(crate) fn from_trusted(m: DMatrix<Complex64>) -> Self {
        debug_assert!(m.is_square() && m.nrows() > 0);
        Self(m)
    }

    /// Builds a matrix from rows of complex entries.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        for row in rows {
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, cols: row.len() });
            }
        }
        Self::new(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
    }

    /// Builds a matrix from rows of real entries.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> =
            rows.iter().map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        Ok(Self(DMatrix::zeros(n, n)))
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        Ok(Self(DMatrix::identity(n, n)))
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::Empty);
        }
        let n = diag.len();
        Self::new(DMatrix::from_fn(n, n, |i, j| if i == j { diag[i] } else { Complex64::ZERO }))
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Result<Self> {
        let diag: Vec<Complex64> = diag.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_diagonal(&diag)
    }

    /// Dimension of the (square) matrix.
    #[inline]
    pub fn n(&self) -> usize {
        self.0.nrows()
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.0[(row, col)]
    }

    pub fn as_matrix(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn into_inner(self) -> DMatrix<Complex64> {
        self.0
    }

    /// Row-major copy of the entries.
    pub fn to_rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.n()).map(|i| self.0.row(i).iter().copied().collect()).collect()
    }

    pub fn matmul(&self, rhs: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.n() != rhs.n() {
            return Err(Error::DimensionMismatch { left: self.n(), right: rhs.n() });
        }
        Ok(Self(&self.0 * &rhs.0))
    }

    pub fn add(&self, rhs: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.n() != rhs.n() {
            return Err(Error::DimensionMismatch { left: self.n(), right: rhs.n() });
        }
        Ok(Self(&self.0 + &rhs.0))
    }

    pub fn sub(&self, rhs: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.n() != rhs.n() {
            return Err(Error::DimensionMismatch { left: self.n(), right: rhs.n() });
        }
        Ok(Self(&self.0 - &rhs.0))
    }

    pub fn scale(&self, c: Complex64) -> ComplexMatrix {
        Self(&self.0 * c)
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    /// Largest entrywise deviation from Hermitian symmetry, `max |a_ij - conj(a_ji)|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let n = self.n();
        let mut dev: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                dev = dev.max((self.0[(i, j)] - self.0[(j, i)].conj()).norm());
            }
        }
        dev
    }

    /// Frobenius norm.
    pub fn frobenius_norm(&self) -> f64 {
        self.0.norm()
    }

    /// `⟨A x, x⟩ = x* A x` for a vector of matching length.
    pub fn quadratic_form(&self, x: &[Complex64]) -> Complex64 {
        let n = self.n();
        assert_eq!(x.len(), n, "vector length must match matrix dimension");
        let mut acc = Complex64::ZERO;
        for (i, xi) in x.iter().enumerate() {
            let row: Complex64 = x.iter().enumerate().map(|(j, xj)| self.0[(i, j)] * xj).sum();
            acc += xi.conj() * row;
        }
        acc
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ComplexMatrix").field("n", &self.n()).field("entries", &self.to_rows()).finish()
    }
}

/// Conjugate transpose `A*`.
pub fn adjoint(a: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix(a.0.adjoint())
}

/// The rotated Hermitian part `(e^{iφ} A + e^{-iφ} A*) / 2`.
pub fn rotated_hermitian_part(a: &ComplexMatrix, angle: f64) -> ComplexMatrix {
    let n = a.n();
    let phase = Complex64::from_polar(0.5, angle);
    let mut h = DMatrix::<Complex64>::zeros(n, n);
    for j in 0..n {
        for i in j..n {
            // h_ij = (e^{iφ} a_ij + e^{-iφ} conj(a_ji)) / 2
            let v = phase * a.0[(i, j)] + (phase * a.0[(j, i)]).conj();
            h[(i, j)] = v;
            h[(j, i)] = v.conj();
        }
        h[(j, j)].im = 0.0;
    }
    ComplexMatrix(h)
}

/// The `2n x 2n` off-diagonal block operator `[[0, A], [B, 0]]`.
pub fn block_offdiag(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = a.n();
    if b.n() != n {
        return Err(Error::DimensionMismatch { left: n, right: b.n() });
    }
    let mut t = DMatrix::<Complex64>::zeros(2 * n, 2 * n);
    t.view_mut((0, n), (n, n)).copy_from(&a.0);
    t.view_mut((n, 0), (n, n)).copy_from(&b.0);
    Ok(ComplexMatrix(t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rejects_bad_shapes_and_values() {
        assert_eq!(ComplexMatrix::new(DMatrix::zeros(0, 0)), Err(Error::Empty));
        assert_eq!(ComplexMatrix::new(DMatrix::zeros(2, 3)), Err(Error::NotSquare { rows: 2, cols: 3 }));
        let mut m = DMatrix::<Complex64>::zeros(2, 2);
        m[(1, 0)] = c(f64::NAN, 0.0);
        assert_eq!(ComplexMatrix::new(m), Err(Error::NonFinite { row: 1, col: 0 }));
        let ragged = vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(1.0, 0.0)]];
        assert!(matches!(ComplexMatrix::from_rows(&ragged), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn adjoint_examples() {
        let s = ComplexMatrix::from_real_rows(&[&[1.0, 2.0], &[2.0, -3.0]]).unwrap();
        assert_eq!(adjoint(&s), s);

        let a = ComplexMatrix::from_real_rows(&[&[0.0, 2.0], &[0.0, 0.0]]).unwrap();
        let expected = ComplexMatrix::from_real_rows(&[&[0.0, 0.0], &[2.0, 0.0]]).unwrap();
        assert_eq!(adjoint(&a), expected);

        let i_id = ComplexMatrix::identity(3).unwrap().scale(c(0.0, 1.0));
        assert_eq!(adjoint(&i_id), ComplexMatrix::identity(3).unwrap().scale(c(0.0, -1.0)));
    }

    #[test]
    fn rotated_hermitian_part_examples() {
        let h = ComplexMatrix::from_rows(&[vec![c(2.0, 0.0), c(1.0, -1.0)], vec![c(1.0, 1.0), c(-1.0, 0.0)]]).unwrap();
        let r0 = rotated_hermitian_part(&h, 0.0);
        assert!(r0.sub(&h).unwrap().frobenius_norm() < 1e-15);

        let a = ComplexMatrix::from_rows(&[vec![c(1.0, 2.0), c(0.5, -1.0)], vec![c(3.0, 0.0), c(0.0, 1.0)]]).unwrap();
        let p0 = rotated_hermitian_part(&a, 0.0);
        let ppi = rotated_hermitian_part(&a, std::f64::consts::PI);
        assert!(p0.add(&ppi).unwrap().frobenius_norm() < 1e-14);
        assert!(p0.hermitian_deviation() == 0.0);

        let nil = ComplexMatrix::from_real_rows(&[&[0.0, 2.0], &[0.0, 0.0]]).unwrap();
        let expected = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        assert!(rotated_hermitian_part(&nil, 0.0).sub(&expected).unwrap().frobenius_norm() < 1e-15);
    }

    #[test]
    fn block_offdiag_examples() {
        let z = ComplexMatrix::zeros(3).unwrap();
        assert_eq!(block_offdiag(&z, &z).unwrap(), ComplexMatrix::zeros(6).unwrap());

        let a = ComplexMatrix::from_real_rows(&[&[2.0]]).unwrap();
        let b = ComplexMatrix::from_real_rows(&[&[3.0]]).unwrap();
        let t = block_offdiag(&a, &b).unwrap();
        assert_eq!(t, ComplexMatrix::from_real_rows(&[&[0.0, 2.0], &[3.0, 0.0]]).unwrap());

        let two = ComplexMatrix::zeros(2).unwrap();
        assert_eq!(block_offdiag(&a, &two), Err(Error::DimensionMismatch { left: 1, right: 2 }));
    }

    #[test]
    fn quadratic_form_matches_definition() {
        let a = ComplexMatrix::from_real_rows(&[&[0.0, 2.0], &[0.0, 0.0]]).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let x = [c(s, 0.0), c(s, 0.0)];
        assert!((a.quadratic_form(&x) - c(1.0, 0.0)).norm() < 1e-15);
    }
}
