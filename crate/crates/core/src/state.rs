//! Validated kets and density matrices, plus purity, fidelity and entropy.

use num_complex::Complex64;

use crate::eigen::eig_hermitian;
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, ONE, ZERO};

/// Normalization tolerance for kets and unit trace.
pub const TOL_NORM: f64 = 1e-9;
/// Hermiticity tolerance.
pub const TOL_HERM: f64 = 1e-10;
/// Eigenvalues in `[-TOL_PSD, 0)` count as zero.
pub const TOL_PSD: f64 = 1e-10;

/// `alpha|0> + beta|1>` with `|alpha|^2 + |beta|^2 = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState {
    alpha: Complex64,
    beta: Complex64,
}

impl QubitState {
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self> {
        check_finite(&[alpha, beta])?;
        let deviation = (alpha.norm_sqr() + beta.norm_sqr() - 1.0).abs();
        if deviation > TOL_NORM {
            return Err(Error::NotNormalized { deviation });
        }
        Ok(Self { alpha, beta })
    }

    /// Rescales `(alpha, beta)` to unit norm. Fails only for the zero vector.
    pub fn normalized(alpha: Complex64, beta: Complex64) -> Result<Self> {
        check_finite(&[alpha, beta])?;
        let norm = (alpha.norm_sqr() + beta.norm_sqr()).sqrt();
        if norm == 0.0 {
            return Err(Error::NotNormalized { deviation: 1.0 });
        }
        Ok(Self { alpha: alpha / norm, beta: beta / norm })
    }

    pub fn zero() -> Self {
        Self { alpha: ONE, beta: ZERO }
    }

    pub fn one() -> Self {
        Self { alpha: ZERO, beta: ONE }
    }

    /// `(|0> + |1>)/√2`.
    pub fn plus() -> Self {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self { alpha: h, beta: h }
    }

    /// `(|0> + i|1>)/√2`.
    pub fn plus_i() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self { alpha: Complex64::new(h, 0.0), beta: Complex64::new(0.0, h) }
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    pub fn to_ket(&self) -> Ket {
        Ket { amplitudes: vec![self.alpha, self.beta] }
    }

    /// `[[|α|², αβ*], [α*β, |β|²]]`.
    pub fn density(&self) -> DensityMatrix {
        ket_to_density(&self.to_ket())
    }
}

/// Unit-norm state vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Ket {
    amplitudes: Vec<Complex64>,
}

impl Ket {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::DimensionMismatch("ket has no amplitudes".into()));
        }
        check_finite(&amplitudes)?;
        let deviation = (norm_sqr(&amplitudes) - 1.0).abs();
        if deviation > TOL_NORM {
            return Err(Error::NotNormalized { deviation });
        }
        Ok(Self { amplitudes })
    }

    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::DimensionMismatch("ket has no amplitudes".into()));
        }
        check_finite(&amplitudes)?;
        let norm = norm_sqr(&amplitudes).sqrt();
        if norm == 0.0 {
            return Err(Error::NotNormalized { deviation: 1.0 });
        }
        Ok(Self { amplitudes: amplitudes.into_iter().map(|z| z / norm).collect() })
    }

    /// Computational basis state `|k>`.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::DimensionMismatch(format!("basis index {k} outside dimension {dim}")));
        }
        let mut amplitudes = vec![ZERO; dim];
        amplitudes[k] = ONE;
        Ok(Self { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn column(&self) -> ComplexMatrix {
        ComplexMatrix::column(&self.amplitudes)
    }

    pub fn inner(&self, other: &Ket) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!("ket dims {} vs {}", self.dim(), other.dim())));
        }
        Ok(self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum())
    }

    /// Tensor product, `self` most significant.
    pub fn kron(&self, other: &Ket) -> Ket {
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|&a| other.amplitudes.iter().map(move |&b| a * b))
            .collect();
        Ket { amplitudes }
    }
}

/// Hermitian, positive semidefinite, unit-trace matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Wraps a matrix already known to be a valid state.
    pub(crate) fn from_trusted(matrix: ComplexMatrix) -> Self {
        Self { matrix }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `I/d`.
    pub fn maximally_mixed(dim: usize) -> Self {
        Self { matrix: ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64) }
    }

    /// Eigenvalues in descending order.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(eig_hermitian(&self.matrix)?.values)
    }
}

/// Checks Hermiticity, then unit trace, then positivity, reporting the
/// measured violation of the first property that fails.
pub fn validate_density(m: &ComplexMatrix) -> Result<DensityMatrix> {
    let violation = m.hermitian_violation()?;
    if violation > TOL_HERM {
        return Err(Error::NotHermitian { violation });
    }
    let tr = m.trace()?;
    let deviation = (tr - ONE).norm();
    if deviation > TOL_NORM {
        return Err(Error::TraceNotOne { deviation });
    }
    let values = eig_hermitian(m)?.values;
    let min_eigenvalue = values.last().copied().unwrap_or(0.0);
    if min_eigenvalue < -TOL_PSD {
        return Err(Error::NotPositive { min_eigenvalue });
    }
    Ok(DensityMatrix { matrix: m.clone() })
}

impl TryFrom<ComplexMatrix> for DensityMatrix {
    type Error = Error;

    fn try_from(m: ComplexMatrix) -> Result<Self> {
        validate_density(&m)
    }
}

/// `|k><k|`.
pub fn ket_to_density(k: &Ket) -> DensityMatrix {
    let col = k.column();
    let matrix = col.matmul(&col.dagger()).expect("outer product of a column is conformable");
    DensityMatrix { matrix }
}

/// `Tr(ρ²)`.
pub fn purity(rho: &DensityMatrix) -> f64 {
    // Tr(ρ²) = Σ|ρ_ij|² for Hermitian ρ.
    rho.matrix.entries().iter().map(|z| z.norm_sqr()).sum()
}

/// `<ψ|ρ|ψ>`, clamped to `[0, 1]`.
pub fn fidelity_pure(psi: &Ket, rho: &DensityMatrix) -> Result<f64> {
    if psi.dim() != rho.dim() {
        return Err(Error::DimensionMismatch(format!("ket dim {} vs density dim {}", psi.dim(), rho.dim())));
    }
    let col = psi.column();
    let value = col.dagger().matmul(&rho.matrix)?.matmul(&col)?[(0, 0)].re;
    Ok(value.clamp(0.0, 1.0))
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let entropy = rho
        .eigenvalues()?
        .into_iter()
        .filter(|&l| l > 0.0)
        .map(|l| -l * l.log2())
        .sum::<f64>();
    Ok(entropy.max(0.0))
}

fn norm_sqr(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

fn check_finite(v: &[Complex64]) -> Result<()> {
    match v.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
        Some(k) => Err(Error::NonFinite { row: k, col: 0 }),
        None => Ok(()),
    }
}
