//! Virtual tensor-product structure over a single Hilbert space.
//!
//! A [`Factorization`] does not describe separate physical systems. It only
//! fixes how a basis index `n` of one `d`-level system is read as a
//! multi-index, most significant factor first.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    dims: Vec<usize>,
}

impl Factorization {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidFactorization("no factors given".into()));
        }
        if let Some(k) = dims.iter().position(|&d| d == 0) {
            return Err(Error::InvalidFactorization(format!("factor {k} has dimension 0")));
        }
        Ok(Self { dims })
    }

    /// `count` two-dimensional factors.
    pub fn qubits(count: usize) -> Result<Self> {
        Self::new(vec![2; count])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().product()
    }

    /// Splits a basis index into per-factor digits, most significant first.
    pub fn digits(&self, index: usize) -> Result<Vec<usize>> {
        if index >= self.total_dim() {
            return Err(Error::DimensionMismatch(format!(
                "basis index {index} outside dimension {}",
                self.total_dim()
            )));
        }
        let mut rest = index;
        let mut out = vec![0; self.dims.len()];
        for (slot, &d) in out.iter_mut().zip(&self.dims).rev() {
            *slot = rest % d;
            rest /= d;
        }
        Ok(out)
    }

    /// Inverse of [`Factorization::digits`].
    pub fn compose(&self, digits: &[usize]) -> Result<usize> {
        if digits.len() != self.dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} digits, got {}",
                self.dims.len(),
                digits.len()
            )));
        }
        digits.iter().zip(&self.dims).try_fold(0usize, |acc, (&x, &d)| {
            if x >= d {
                Err(Error::DimensionMismatch(format!("digit {x} outside factor dimension {d}")))
            } else {
                Ok(acc * d + x)
            }
        })
    }

    pub fn check_square(&self, m: &ComplexMatrix) -> Result<()> {
        if !m.is_square() {
            return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        if m.rows() != self.total_dim() {
            return Err(Error::DimensionMismatch(format!(
                "matrix dimension {} does not match factorization {:?} (product {})",
                m.rows(),
                self.dims,
                self.total_dim()
            )));
        }
        Ok(())
    }

    fn normalize_keep(&self, keep: &[usize]) -> Result<Vec<usize>> {
        let mut kept = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        if let Some(&bad) = kept.iter().find(|&&k| k >= self.dims.len()) {
            return Err(Error::InvalidSelection(format!(
                "factor {bad} out of range for {} factors",
                self.dims.len()
            )));
        }
        Ok(kept)
    }
}

/// Reduced matrix on the factors listed in `keep` (a set; kept factors stay in
/// ascending order). An empty `keep` is rejected; see [`reduce`] for the
/// full-trace case.
pub fn partial_trace(a: &ComplexMatrix, f: &Factorization, keep: &[usize]) -> Result<ComplexMatrix> {
    if keep.is_empty() {
        return Err(Error::InvalidSelection("keep set is empty".into()));
    }
    reduce(a, f, keep)
}

/// Like [`partial_trace`] but accepts an empty `keep`, returning the 1x1
/// matrix holding the full trace.
pub fn reduce(a: &ComplexMatrix, f: &Factorization, keep: &[usize]) -> Result<ComplexMatrix> {
    f.check_square(a)?;
    let kept = f.normalize_keep(keep)?;
    let dims = f.dims();
    let n = f.total_dim();

    // Split every full index into (kept multi-index, traced multi-index).
    let mut kept_idx = vec![0usize; n];
    let mut traced_idx = vec![0usize; n];
    for i in 0..n {
        let digits = f.digits(i)?;
        let (mut k, mut t) = (0usize, 0usize);
        for (pos, (&x, &d)) in digits.iter().zip(dims).enumerate() {
            if kept.binary_search(&pos).is_ok() {
                k = k * d + x;
            } else {
                t = t * d + x;
            }
        }
        kept_idx[i] = k;
        traced_idx[i] = t;
    }

    let out_dim: usize = kept.iter().map(|&k| dims[k]).product();
    let mut out = vec![Complex64::new(0.0, 0.0); out_dim * out_dim];
    let entries = a.entries();
    for i in 0..n {
        for j in 0..n {
            if traced_idx[i] == traced_idx[j] {
                out[kept_idx[i] * out_dim + kept_idx[j]] += entries[i * n + j];
            }
        }
    }
    ComplexMatrix::new(out_dim, out_dim, out)
}
