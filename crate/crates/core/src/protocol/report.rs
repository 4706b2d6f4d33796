//! End-to-end protocol runs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::channel::{build_initial_state, outcome_probabilities, single_shot, teleport_channel};
use super::kraus::kraus_set;
use super::swap::split_marginals;
use crate::error::{Error, Result};
use crate::state::{fidelity_pure, von_neumann_entropy, DensityMatrix, QubitState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Average over all Bell outcomes.
    Ensemble,
    /// One sampled outcome with its correction applied.
    SingleShot,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Ensemble => "ensemble",
            Mode::SingleShot => "single-shot",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ensemble" => Ok(Mode::Ensemble),
            "single-shot" | "single_shot" => Ok(Mode::SingleShot),
            other => Err(Error::InvalidSelection(format!("unknown mode {other:?}"))),
        }
    }
}

/// Outcome of one protocol run. Serialized field order is fixed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProtocolReport {
    pub mode: Mode,
    pub seed: u64,
    pub resource_index: usize,
    /// Set for resources other than `|β^1>`, whose corrections are derived
    /// by search rather than taken from the standard table.
    pub paper_extension: bool,
    pub input_state: QubitState,
    /// Sampled Bell outcome; `None` in ensemble mode.
    pub outcome: Option<usize>,
    pub outcome_probabilities: [f64; 4],
    pub fidelity: f64,
    pub output_entropy_bits: f64,
    pub marginal_3: DensityMatrix,
    pub marginal_12: DensityMatrix,
    pub output_density: DensityMatrix,
}

pub fn run_protocol(psi: &QubitState, resource_index: usize, mode: Mode, seed: u64) -> Result<ProtocolReport> {
    let ks = kraus_set(resource_index)?;
    let rho_in = build_initial_state(psi, resource_index)?;
    let outcome_probabilities = outcome_probabilities(&rho_in, &ks)?;
    let (outcome, output_density) = match mode {
        Mode::Ensemble => (None, teleport_channel(&rho_in, &ks)?),
        Mode::SingleShot => {
            let shot = single_shot(&rho_in, &ks, seed)?;
            (Some(shot.outcome), shot.post_state)
        }
    };
    let (marginal_12, marginal_3) = split_marginals(&output_density)?;
    Ok(ProtocolReport {
        mode,
        seed,
        resource_index,
        paper_extension: resource_index != 1,
        input_state: *psi,
        outcome,
        outcome_probabilities,
        fidelity: fidelity_pure(&psi.to_ket(), &marginal_3)?,
        output_entropy_bits: von_neumann_entropy(&output_density)?,
        marginal_3,
        marginal_12,
        output_density,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ComplexMatrix;
    use crate::state::DensityMatrix;

    #[test]
    fn basis_state_ensemble() {
        let r = run_protocol(&QubitState::zero(), 1, Mode::Ensemble, 0).unwrap();
        assert!((r.fidelity - 1.0).abs() < 1e-12);
        assert!((r.output_entropy_bits - 2.0).abs() < 1e-9);
        assert!(r.outcome.is_none());
        assert!(!r.paper_extension);
        assert!((r.outcome_probabilities.iter().sum::<f64>() - 1.0).abs() < 1e-10);
        assert!(r.marginal_12.matrix().approx_eq(DensityMatrix::maximally_mixed(4).matrix(), 1e-12).unwrap());
    }

    #[test]
    fn plus_state_lands_on_last_factor() {
        let r = run_protocol(&QubitState::plus(), 1, Mode::Ensemble, 0).unwrap();
        let plus = ComplexMatrix::from_real(2, 2, &[0.5, 0.5, 0.5, 0.5]).unwrap();
        assert!(r.marginal_3.matrix().approx_eq(&plus, 1e-12).unwrap());
    }

    #[test]
    fn single_shot_report() {
        for j in 1..=4 {
            let r = run_protocol(&QubitState::plus_i(), j, Mode::SingleShot, 11).unwrap();
            assert!(r.outcome.is_some());
            assert!((r.fidelity - 1.0).abs() < 1e-9);
            assert!(r.output_entropy_bits.abs() < 1e-9);
            assert_eq!(r.paper_extension, j != 1);
            assert_eq!(r, run_protocol(&QubitState::plus_i(), j, Mode::SingleShot, 11).unwrap());
        }
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("single-shot".parse::<Mode>().unwrap(), Mode::SingleShot);
        assert_eq!(Mode::Ensemble.to_string(), "ensemble");
        assert!("batch".parse::<Mode>().is_err());
    }
}
