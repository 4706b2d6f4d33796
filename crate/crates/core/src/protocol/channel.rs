//! Initial state, ensemble channel and single-shot Bell measurement.
//!
//! The Bell measurement is the set of rank-2 projectors `A^i / 2` on the
//! full eight-dimensional space; nothing here splits the system into
//! separate particles.
//!
//! Single-shot sampling uses `rand_chacha::ChaCha8Rng` seeded through
//! `SeedableRng::seed_from_u64(seed)`. One uniform `f64` in `[0, 1)` is drawn
//! per shot (`Rng::random::<f64>()`) and mapped onto the cumulative
//! distribution of the admissible outcomes in index order 1..=4.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::bell::{bell_basis, check_index};
use super::kraus::KrausSet;
use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::matrix::ComplexMatrix;
use crate::state::{validate_density, DensityMatrix, QubitState};

/// Branches with probability below this are never selected.
pub const MIN_BRANCH_PROBABILITY: f64 = 1e-14;

/// `|ψ><ψ| ⊗ |β^j><β^j|` on the eight-level system.
pub fn build_initial_state(psi: &QubitState, resource_index: usize) -> Result<DensityMatrix> {
    check_index(resource_index)?;
    let m = psi.density().into_matrix().kron(&bell_basis().projector(resource_index)?);
    Ok(DensityMatrix::from_trusted(m))
}

fn check_input(rho: &DensityMatrix) -> Result<()> {
    Factorization::qubits(3)?.check_square(rho.matrix())
}

/// `w Σ_i B^i A^i ρ A^i† B^i†`.
pub fn teleport_channel(rho: &DensityMatrix, ks: &KrausSet) -> Result<DensityMatrix> {
    check_input(rho)?;
    let mut out = ComplexMatrix::zeros(8, 8);
    for i in 1..=4 {
        let k = ks.operator(i)?;
        out = out.add(&k.matmul(rho.matrix())?.matmul(&k.dagger())?)?;
    }
    validate_density(&out)
}

/// `p_i = Tr(M_i ρ M_i†)` with `M_i = A^i / 2`.
pub fn outcome_probabilities(rho: &DensityMatrix, ks: &KrausSet) -> Result<[f64; 4]> {
    check_input(rho)?;
    let mut p = [0.0; 4];
    for (i, slot) in (1..=4).zip(p.iter_mut()) {
        let m = ks.measurement(i)?;
        *slot = m.matmul(rho.matrix())?.matmul(&m.dagger())?.trace()?.re;
    }
    Ok(p)
}

/// Corrected, renormalized state after Bell outcome `outcome`, with its
/// probability.
pub fn post_measurement_state(rho: &DensityMatrix, ks: &KrausSet, outcome: usize) -> Result<(f64, DensityMatrix)> {
    check_input(rho)?;
    let k = ks.operator(outcome)?;
    let branch = k.matmul(rho.matrix())?.matmul(&k.dagger())?;
    let p = branch.trace()?.re;
    if p < MIN_BRANCH_PROBABILITY {
        return Err(Error::NoAdmissibleOutcome);
    }
    Ok((p, DensityMatrix::from_trusted(branch.scale_real(1.0 / p))))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Shot {
    /// Bell outcome, 1..=4.
    pub outcome: usize,
    pub probabilities: [f64; 4],
    pub post_state: DensityMatrix,
}

/// One Bell measurement plus correction, reproducible from `seed`.
pub fn single_shot(rho: &DensityMatrix, ks: &KrausSet, seed: u64) -> Result<Shot> {
    single_shot_with_rng(rho, ks, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Like [`single_shot`], drawing from a caller-owned generator.
pub fn single_shot_with_rng<R: Rng + ?Sized>(rho: &DensityMatrix, ks: &KrausSet, rng: &mut R) -> Result<Shot> {
    let probabilities = outcome_probabilities(rho, ks)?;
    let outcome = sample_outcome(&probabilities, rng.random::<f64>())?;
    let (_, post_state) = post_measurement_state(rho, ks, outcome)?;
    Ok(Shot { outcome, probabilities, post_state })
}

/// Maps `u` in `[0, 1)` onto the admissible outcomes (1-based).
pub fn sample_outcome(probabilities: &[f64; 4], u: f64) -> Result<usize> {
    let admissible = |p: f64| p >= MIN_BRANCH_PROBABILITY;
    let total: f64 = probabilities.iter().copied().filter(|&p| admissible(p)).sum();
    if total <= 0.0 {
        return Err(Error::NoAdmissibleOutcome);
    }
    let target = u * total;
    let mut acc = 0.0;
    let mut last = 0;
    for (k, &p) in probabilities.iter().enumerate() {
        if !admissible(p) {
            continue;
        }
        acc += p;
        last = k + 1;
        if target < acc {
            return Ok(last);
        }
    }
    Ok(last)
}
