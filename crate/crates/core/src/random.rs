//! Seeded random states and matrices for property sweeps.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::eigen::eig_hermitian;
use crate::matrix::ComplexMatrix;
use crate::state::{validate_density, DensityMatrix, Ket, QubitState};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Matrix with i.i.d. standard complex Gaussian entries.
pub fn ginibre<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> ComplexMatrix {
    let data = (0..rows * cols).map(|_| gaussian(rng)).collect();
    ComplexMatrix::new(rows, cols, data).expect("finite Gaussian samples")
}

/// Haar-distributed qubit state.
pub fn haar_qubit<R: Rng + ?Sized>(rng: &mut R) -> QubitState {
    loop {
        if let Ok(q) = QubitState::normalized(gaussian(rng), gaussian(rng)) {
            return q;
        }
    }
}

/// Haar-distributed pure state of dimension `dim`.
pub fn haar_ket<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Ket {
    loop {
        if let Ok(k) = Ket::normalized((0..dim).map(|_| gaussian(rng)).collect()) {
            return k;
        }
    }
}

/// Full-rank random state `G G† / Tr(G G†)` (Hilbert-Schmidt measure).
pub fn random_density<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DensityMatrix {
    let g = ginibre(dim, dim, rng);
    let w = g.matmul(&g.dagger()).expect("square");
    let tr = w.trace().expect("square").re;
    validate_density(&w.scale_real(1.0 / tr)).expect("Ginibre construction is a valid state")
}

/// `(G + G†) / 2`.
pub fn random_hermitian<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ComplexMatrix {
    let g = ginibre(dim, dim, rng);
    g.add(&g.dagger()).expect("square").scale_real(0.5)
}

/// Eigenvector matrix of a random Hermitian matrix.
pub fn random_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ComplexMatrix {
    eig_hermitian(&random_hermitian(dim, rng)).expect("random Hermitian converges").vectors
}
