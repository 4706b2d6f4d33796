//! Cyclic Jacobi eigensolver for complex Hermitian matrices.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiOptions {
    /// Largest `|a_ij - conj(a_ji)|` accepted as Hermitian.
    pub herm_tol: f64,
    /// Sweeps stop once the off-diagonal Frobenius norm drops below
    /// `off_tol * max(1, ||A||_F)`.
    pub off_tol: f64,
    pub max_sweeps: usize,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        Self { herm_tol: 1e-10, off_tol: 1e-13, max_sweeps: 100 }
    }
}

/// Eigenvalues in descending order with matching eigenvector columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
    pub sweeps: usize,
}

impl HermitianEigen {
    /// `V diag(λ) V†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let diag: Vec<Complex64> = self.values.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        self.vectors
            .matmul(&ComplexMatrix::diag(&diag))
            .and_then(|m| m.matmul(&self.vectors.dagger()))
            .expect("eigendecomposition factors are square and conformable")
    }
}

pub fn eig_hermitian(a: &ComplexMatrix) -> Result<HermitianEigen> {
    eig_hermitian_with(a, JacobiOptions::default())
}

pub fn eig_hermitian_with(a: &ComplexMatrix, opts: JacobiOptions) -> Result<HermitianEigen> {
    let violation = a.hermitian_violation()?;
    if violation > opts.herm_tol {
        return Err(Error::NotHermitian { violation });
    }
    let n = a.rows();
    let src = a.entries();

    // Work on the exactly Hermitian part.
    let mut m = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            m[i * n + j] = (src[i * n + j] + src[j * n + i].conj()) * 0.5;
        }
    }
    let mut v = ComplexMatrix::identity(n).entries().to_vec();

    let threshold = opts.off_tol * a.frobenius_norm().max(1.0);
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&m, n);
        if off < threshold {
            break;
        }
        if sweeps == opts.max_sweeps {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, &mut v, n, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[j * n + j].re.total_cmp(&m[i * n + i].re));
    let values = order.iter().map(|&k| m[k * n + k].re).collect();
    let mut vecs = Vec::with_capacity(n * n);
    for r in 0..n {
        vecs.extend(order.iter().map(|&k| v[r * n + k]));
    }
    Ok(HermitianEigen { values, vectors: ComplexMatrix::new(n, n, vecs)?, sweeps })
}

fn off_diagonal_norm(m: &[Complex64], n: usize) -> f64 {
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += m[i * n + j].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Annihilates `m[p][q]` with `J = D R`, where `D` rotates the phase of
/// column `q` so the pivot becomes real and `R` is the real Jacobi rotation.
fn rotate(m: &mut [Complex64], v: &mut [Complex64], n: usize, p: usize, q: usize) {
    let apq = m[p * n + q];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let phase = apq.conj() / g;
    let app = m[p * n + p].re;
    let aqq = m[q * n + q].re;
    let theta = (aqq - app) / (2.0 * g);
    let t = if theta >= 0.0 {
        1.0 / (theta + (theta * theta + 1.0).sqrt())
    } else {
        -1.0 / (-theta + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let j_pp = Complex64::new(c, 0.0);
    let j_pq = Complex64::new(s, 0.0);
    let j_qp = phase * -s;
    let j_qq = phase * c;

    // m <- m J
    for k in 0..n {
        let x = m[k * n + p];
        let y = m[k * n + q];
        m[k * n + p] = x * j_pp + y * j_qp;
        m[k * n + q] = x * j_pq + y * j_qq;
    }
    // m <- J† m
    for k in 0..n {
        let x = m[p * n + k];
        let y = m[q * n + k];
        m[p * n + k] = j_pp.conj() * x + j_qp.conj() * y;
        m[q * n + k] = j_pq.conj() * x + j_qq.conj() * y;
    }
    m[p * n + q] = Complex64::new(0.0, 0.0);
    m[q * n + p] = Complex64::new(0.0, 0.0);
    m[p * n + p].im = 0.0;
    m[q * n + q].im = 0.0;

    // v <- v J
    for k in 0..n {
        let x = v[k * n + p];
        let y = v[k * n + q];
        v[k * n + p] = x * j_pp + y * j_qp;
        v[k * n + q] = x * j_pq + y * j_qq;
    }
}
