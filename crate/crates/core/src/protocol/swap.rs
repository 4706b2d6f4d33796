//! SWAP gate and its contrast with the teleportation channel.

use serde::{Deserialize, Serialize};

use super::channel::{build_initial_state, teleport_channel};
use super::kraus::kraus_set;
use crate::error::{Error, Result};
use crate::factorization::{partial_trace, Factorization};
use crate::matrix::{ComplexMatrix, ONE};
use crate::state::{fidelity_pure, purity, validate_density, von_neumann_entropy, DensityMatrix, QubitState};

/// Permutation matrix exchanging factors `p` and `q` (0-based).
pub fn swap_gate(f: &Factorization, p: usize, q: usize) -> Result<ComplexMatrix> {
    let n = f.len();
    if p >= n || q >= n {
        return Err(Error::InvalidSelection(format!("factors ({p}, {q}) out of range for {n} factors")));
    }
    if p == q {
        return Err(Error::InvalidSelection(format!("cannot swap factor {p} with itself")));
    }
    if f.dims()[p] != f.dims()[q] {
        return Err(Error::InvalidFactorization(format!(
            "factors {p} and {q} have unequal dimensions {} and {}",
            f.dims()[p],
            f.dims()[q]
        )));
    }
    let d = f.total_dim();
    let mut m = ComplexMatrix::zeros(d, d);
    for col in 0..d {
        let mut digits = f.digits(col)?;
        digits.swap(p, q);
        m = m.with_entry(f.compose(&digits)?, col, ONE)?;
    }
    Ok(m)
}

/// Marginals and diagnostics of one eight-level output state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BranchSummary {
    /// Whether the branch consumes the Bell pair prepared on factors 2 and 3.
    pub requires_bell_resource: bool,
    /// Classical bits communicated from the measuring side.
    pub classical_bits: u32,
    pub fidelity_3: f64,
    pub purity_12: f64,
    pub entropy_12_bits: f64,
    pub purity_3: f64,
    pub entropy_3_bits: f64,
    pub marginal_3: DensityMatrix,
    pub marginal_12: DensityMatrix,
    pub output: DensityMatrix,
}

impl BranchSummary {
    fn new(psi: &QubitState, output: DensityMatrix, requires_bell_resource: bool, classical_bits: u32) -> Result<Self> {
        let (marginal_12, marginal_3) = split_marginals(&output)?;
        Ok(Self {
            requires_bell_resource,
            classical_bits,
            fidelity_3: fidelity_pure(&psi.to_ket(), &marginal_3)?,
            purity_12: purity(&marginal_12),
            entropy_12_bits: von_neumann_entropy(&marginal_12)?,
            purity_3: purity(&marginal_3),
            entropy_3_bits: von_neumann_entropy(&marginal_3)?,
            marginal_3,
            marginal_12,
            output,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SwapComparison {
    pub input_state: QubitState,
    pub teleport: BranchSummary,
    pub swap: BranchSummary,
}

/// Runs both the teleportation channel and `SWAP_{0<->2}` on
/// `|ψ><ψ| ⊗ |β^1><β^1|` and summarizes the outputs. No equivalence between
/// the two maps is asserted; the record only exposes the differences.
pub fn compare_swap_vs_teleport(psi: &QubitState) -> Result<SwapComparison> {
    let rho_in = build_initial_state(psi, 1)?;
    let teleported = teleport_channel(&rho_in, &kraus_set(1)?)?;
    let s = swap_gate(&Factorization::qubits(3)?, 0, 2)?;
    let swapped = validate_density(&s.matmul(rho_in.matrix())?.matmul(&s.dagger())?)?;
    Ok(SwapComparison {
        input_state: *psi,
        teleport: BranchSummary::new(psi, teleported, true, 2)?,
        swap: BranchSummary::new(psi, swapped, false, 0)?,
    })
}

/// Reductions onto factors {0, 1} and {2}.
pub fn split_marginals(rho: &DensityMatrix) -> Result<(DensityMatrix, DensityMatrix)> {
    let f = Factorization::qubits(3)?;
    let m12 = validate_density(&partial_trace(rho.matrix(), &f, &[0, 1])?)?;
    let m3 = validate_density(&partial_trace(rho.matrix(), &f, &[2])?)?;
    Ok((m12, m3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::protocol::bell::bell_basis;
    use crate::protocol::tables::printed_swap;
    use num_complex::Complex64;

    #[test]
    fn matches_printed_swap() {
        let s = swap_gate(&Factorization::qubits(3).unwrap(), 0, 2).unwrap();
        assert_eq!(s, printed_swap());
        assert_eq!(s[(1, 4)], ONE);
        assert_eq!(s, swap_gate(&Factorization::qubits(3).unwrap(), 2, 0).unwrap());
    }

    #[test]
    fn swap_is_involution() {
        let s = swap_gate(&Factorization::qubits(3).unwrap(), 0, 2).unwrap();
        assert!(s.matmul(&s).unwrap().approx_eq(&ComplexMatrix::identity(8), 1e-12).unwrap());
    }

    #[test]
    fn swap_moves_input_to_last_factor() {
        let psi = QubitState::new(Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)).unwrap();
        let f = Factorization::qubits(3).unwrap();
        let s = swap_gate(&f, 0, 2).unwrap();
        for j in 1..=4 {
            let rho = build_initial_state(&psi, j).unwrap();
            let out = s.matmul(rho.matrix()).unwrap().matmul(&s.dagger()).unwrap();
            let want = bell_basis().projector(j).unwrap().kron(psi.density().matrix());
            assert!(out.approx_eq(&want, 1e-12).unwrap(), "resource {j}");
        }
    }

    #[test]
    fn invalid_swaps() {
        let f = Factorization::qubits(3).unwrap();
        assert!(swap_gate(&f, 1, 1).is_err());
        assert!(swap_gate(&f, 0, 3).is_err());
        let g = Factorization::new(vec![2, 3]).unwrap();
        assert!(matches!(swap_gate(&g, 0, 1), Err(Error::InvalidFactorization(_))));
    }

    #[test]
    fn general_swap_permutes_qutrits() {
        let f = Factorization::new(vec![3, 2, 3]).unwrap();
        let s = swap_gate(&f, 0, 2).unwrap();
        // |1,0,2> -> |2,0,1>
        let from = f.compose(&[1, 0, 2]).unwrap();
        let to = f.compose(&[2, 0, 1]).unwrap();
        assert_eq!(s[(to, from)], ONE);
        assert!(s.unitarity_violation().unwrap() < 1e-15);
    }

    #[test]
    fn comparison_contrasts_branches() {
        let cmp = compare_swap_vs_teleport(&QubitState::plus_i()).unwrap();
        assert!((cmp.teleport.entropy_12_bits - 2.0).abs() < 1e-9);
        assert!(cmp.swap.entropy_12_bits.abs() < 1e-9);
        assert!((cmp.swap.purity_12 - 1.0).abs() < 1e-12);
        assert!((cmp.teleport.purity_12 - 0.25).abs() < 1e-12);
        assert!((cmp.teleport.fidelity_3 - 1.0).abs() < 1e-9);
        assert!((cmp.swap.fidelity_3 - 1.0).abs() < 1e-9);
        let bell = bell_basis().projector(1).unwrap();
        assert!(cmp.swap.marginal_12.matrix().approx_eq(&bell, 1e-12).unwrap());
    }
}
