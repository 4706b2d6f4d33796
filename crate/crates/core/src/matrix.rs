//! Dense complex matrices.
//!
//! Storage is row-major. Tensor products use the big-endian convention: in
//! `a.kron(&b)` the index of `a` is the most significant digit of the combined
//! index, so basis state `|n>` of an eight-level system maps to `|a>|b>|c>`
//! with `n = 4a + 2b + c`.

use std::fmt;
use std::ops::Index;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default tolerance for [`ComplexMatrix::approx_eq`].
pub const DEFAULT_TOL: f64 = 1e-12;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries, rejecting bad lengths and
    /// non-finite values.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if let Some(k) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite { row: k / cols, col: k % cols });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix with real entries given row by row.
    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        Self::new(rows, cols, data.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for k in 0..dim {
            m.data[k * dim + k] = ONE;
        }
        m
    }

    /// Square matrix with the given diagonal.
    pub fn diag(entries: &[Complex64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (k, &z) in entries.iter().enumerate() {
            m.data[k * n + k] = z;
        }
        m
    }

    /// Block-diagonal matrix built from square blocks.
    pub fn block_diag(blocks: &[ComplexMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut m = Self::zeros(n, n);
        let mut offset = 0;
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m.data[(offset + r) * n + offset + c] = b[(r, c)];
                }
            }
            offset += b.rows;
        }
        m
    }

    /// Column vector with the given entries.
    pub fn column(entries: &[Complex64]) -> Self {
        Self { rows: entries.len(), cols: 1, data: entries.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn get(&self, row: usize, col: usize) -> Option<Complex64> {
        (row < self.rows && col < self.cols).then(|| self.data[row * self.cols + col])
    }

    /// Copy of `self` with one entry replaced.
    pub fn with_entry(&self, row: usize, col: usize, value: Complex64) -> Result<Self> {
        if row >= self.rows || col >= self.cols {
            return Err(Error::DimensionMismatch(format!(
                "entry ({row}, {col}) outside {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut data = self.data.clone();
        data[row * self.cols + col] = value;
        Self::new(self.rows, self.cols, data)
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == ZERO {
                    continue;
                }
                let row = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in out.data[i * other.cols..(i + 1) * other.cols].iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product, `self` as the most significant factor.
    pub fn kron(&self, other: &ComplexMatrix) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..self.rows {
            for k in 0..other.rows {
                for j in 0..self.cols {
                    let a = self.data[i * self.cols + j];
                    data.extend(other.data[k * other.cols..(k + 1) * other.cols].iter().map(|&b| a * b));
                }
            }
        }
        Self { rows, cols, data }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.data[r * self.cols + c].conj());
            }
        }
        Self { rows: self.cols, cols: self.rows, data }
    }

    pub fn trace(&self) -> Result<Complex64> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok((0..self.rows).map(|k| self.data[k * self.cols + k]).sum())
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&z| z * factor).collect() }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    pub fn add(&self, other: &ComplexMatrix) -> Result<Self> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &ComplexMatrix) -> Result<Self> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> Result<f64> {
        self.check_same_shape(other)?;
        Ok(self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
    }

    /// True iff every entry of `self - other` has modulus at most `tol`.
    pub fn approx_eq(&self, other: &ComplexMatrix, tol: f64) -> Result<bool> {
        Ok(self.max_abs_diff(other)? <= tol)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest `|a_ij - conj(a_ji)|`.
    pub fn hermitian_violation(&self) -> Result<f64> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.data[i * n + j] - self.data[j * n + i].conj()).norm());
            }
        }
        Ok(worst)
    }

    /// Largest entrywise deviation of `self† self` from the identity.
    pub fn unitarity_violation(&self) -> Result<f64> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        self.dagger().matmul(self)?.max_abs_diff(&Self::identity(self.rows))
    }

    /// True when every entry has an exactly integral real part and zero
    /// imaginary part.
    pub fn is_integer_valued(&self) -> bool {
        self.data.iter().all(|z| z.im == 0.0 && z.re.fract() == 0.0)
    }

    fn check_same_shape(&self, other: &ComplexMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (row, col): (usize, usize)) -> &Complex64 {
        assert!(row < self.rows && col < self.cols, "index ({row}, {col}) out of bounds");
        &self.data[row * self.cols + col]
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, " ")?;
            for c in 0..self.cols {
                let z = self.data[r * self.cols + c];
                write!(f, " {:+.6}{:+.6}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Pauli matrices and computational basis vectors.
pub mod pauli {
    use super::*;

    pub fn identity() -> ComplexMatrix {
        ComplexMatrix::identity(2)
    }

    pub fn x() -> ComplexMatrix {
        ComplexMatrix { rows: 2, cols: 2, data: vec![ZERO, ONE, ONE, ZERO] }
    }

    pub fn y() -> ComplexMatrix {
        ComplexMatrix { rows: 2, cols: 2, data: vec![ZERO, -I, I, ZERO] }
    }

    pub fn z() -> ComplexMatrix {
        ComplexMatrix { rows: 2, cols: 2, data: vec![ONE, ZERO, ZERO, -ONE] }
    }

    /// `|k>` in dimension `dim`, as a column.
    pub fn basis_ket(dim: usize, k: usize) -> ComplexMatrix {
        let mut data = vec![ZERO; dim];
        data[k] = ONE;
        ComplexMatrix { rows: dim, cols: 1, data }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_times_pauli() {
        assert_eq!(pauli::identity().matmul(&pauli::x()).unwrap(), pauli::x());
    }

    #[test]
    fn pauli_x_is_involution() {
        assert_eq!(pauli::x().matmul(&pauli::x()).unwrap(), pauli::identity());
    }

    #[test]
    fn x_times_z_is_minus_i_y() {
        // [[0,1],[1,0]]·[[1,0],[0,-1]] = [[0,-1],[1,0]] by hand; -i·σy = [[0,-1],[1,0]].
        let hand = ComplexMatrix::from_real(2, 2, &[0.0, -1.0, 1.0, 0.0]).unwrap();
        let xz = pauli::x().matmul(&pauli::z()).unwrap();
        assert_eq!(xz, hand);
        assert_eq!(xz, pauli::y().scale(-I));
    }

    #[test]
    fn matmul_rejects_mismatch() {
        let a = ComplexMatrix::zeros(2, 3);
        assert!(matches!(a.matmul(&a), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn kron_of_identities() {
        assert_eq!(pauli::identity().kron(&pauli::identity()), ComplexMatrix::identity(4));
    }

    #[test]
    fn kron_is_big_endian() {
        let v = pauli::basis_ket(2, 0).kron(&pauli::basis_ket(2, 1));
        assert_eq!(v, pauli::basis_ket(4, 1));
        let v = pauli::basis_ket(2, 1).kron(&pauli::basis_ket(2, 0));
        assert_eq!(v, pauli::basis_ket(4, 2));
    }

    #[test]
    fn kron_matches_printed_b2() {
        #[rustfmt::skip]
        let b2 = ComplexMatrix::from_real(8, 8, &[
            0., 1., 0., 0., 0., 0., 0., 0.,
            1., 0., 0., 0., 0., 0., 0., 0.,
            0., 0., 0., 1., 0., 0., 0., 0.,
            0., 0., 1., 0., 0., 0., 0., 0.,
            0., 0., 0., 0., 0., 1., 0., 0.,
            0., 0., 0., 0., 1., 0., 0., 0.,
            0., 0., 0., 0., 0., 0., 0., 1.,
            0., 0., 0., 0., 0., 0., 1., 0.,
        ]).unwrap();
        let built = pauli::identity().kron(&pauli::identity()).kron(&pauli::x());
        assert_eq!(built, b2);
    }

    #[test]
    fn dagger_of_identity_and_involution() {
        assert_eq!(ComplexMatrix::identity(4).dagger(), ComplexMatrix::identity(4));
        let a = ComplexMatrix::new(
            2,
            3,
            (0..6).map(|k| Complex64::new(k as f64, -(k as f64) * 0.5)).collect(),
        )
        .unwrap();
        assert_eq!(a.dagger().rows(), 3);
        assert_eq!(a.dagger().dagger(), a);
    }

    #[test]
    fn trace_values() {
        assert_eq!(ComplexMatrix::identity(8).trace().unwrap(), Complex64::new(8.0, 0.0));
        assert_eq!(pauli::x().trace().unwrap(), ZERO);
        assert!(matches!(ComplexMatrix::zeros(2, 3).trace(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn approx_eq_cases() {
        let a = pauli::y();
        assert!(a.approx_eq(&a, 0.0).unwrap());
        assert!(!pauli::identity().approx_eq(&pauli::x(), DEFAULT_TOL).unwrap());
        assert!(ComplexMatrix::identity(2).approx_eq(&ComplexMatrix::identity(3), 1.0).is_err());
    }

    #[test]
    fn rejects_non_finite_and_bad_length() {
        assert!(matches!(
            ComplexMatrix::from_real(1, 2, &[0.0, f64::NAN]),
            Err(Error::NonFinite { row: 0, col: 1 })
        ));
        assert!(ComplexMatrix::from_real(2, 2, &[0.0; 3]).is_err());
        assert!(ComplexMatrix::from_real(0, 0, &[]).is_err());
    }

    #[test]
    fn block_diag_layout() {
        let m = ComplexMatrix::block_diag(&[pauli::x(), pauli::z()]);
        assert_eq!(m[(0, 1)], ONE);
        assert_eq!(m[(3, 3)], -ONE);
        assert_eq!(m[(0, 2)], ZERO);
    }
}
