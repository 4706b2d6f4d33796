//! Invariant suite behind `qteleport verify`.

use qteleport_core::prelude::*;
use qteleport_core::protocol::tables::{printed_a, printed_b, printed_swap};
use qteleport_core::random::{haar_qubit, random_density, seeded_rng};
use serde::Serialize;

/// Tolerance for operator identities (completeness, projector, unitarity).
pub const OPERATOR_TOL: f64 = 1e-12;
/// Tolerance for state identities in the sweeps.
pub const STATE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn from_outcome(name: &'static str, outcome: Result<std::result::Result<String, String>>) -> Self {
        match outcome {
            Ok(Ok(detail)) => Self { name, passed: true, detail },
            Ok(Err(detail)) => Self { name, passed: false, detail },
            Err(e) => Self { name, passed: false, detail: format!("error: {e}") },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifySummary {
    pub passed: bool,
    pub first_failure: Option<&'static str>,
    pub count: usize,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

type Verdict = Result<std::result::Result<String, String>>;

fn verdict(ok: bool, detail: String) -> Verdict {
    Ok(if ok { Ok(detail) } else { Err(detail) })
}

/// Runs every check against `ks` (the `|β^1>` set under test) and the
/// derived sets for the other resources. `count` random states per sweep,
/// all drawn from `seed`.
pub fn run_checks(ks: &KrausSet, count: usize, seed: u64, tol: f64) -> VerifySummary {
    let checks = vec![
        CheckResult::from_outcome("table-match", table_match(ks)),
        CheckResult::from_outcome("kraus-completeness", kraus_completeness(ks)),
        CheckResult::from_outcome("projector-rank", projector_rank(ks)),
        CheckResult::from_outcome("correction-unitarity", correction_unitarity(ks)),
        CheckResult::from_outcome("bell-orthonormality", bell_orthonormality()),
        CheckResult::from_outcome("swap-table", swap_table()),
        CheckResult::from_outcome("corrections", corrections()),
        CheckResult::from_outcome("trace-preservation", trace_preservation(ks, count, seed)),
        CheckResult::from_outcome("fidelity-sweep", fidelity_sweep(ks, count, seed, tol)),
    ];
    let first_failure = checks.iter().find(|c| !c.passed).map(|c| c.name);
    VerifySummary { passed: first_failure.is_none(), first_failure, count, seed, checks }
}

fn table_match(ks: &KrausSet) -> Verdict {
    let mut worst: f64 = 0.0;
    let mut mismatched = Vec::new();
    for i in 1..=4 {
        for (label, got, want) in [("A", ks.a(i)?, printed_a(i)), ("B", ks.b(i)?, printed_b(i))] {
            let d = got.max_abs_diff(&want)?;
            worst = worst.max(d);
            if got != &want {
                mismatched.push(format!("{label}^{i}"));
            }
        }
    }
    if mismatched.is_empty() {
        verdict(true, "A^1..A^4, B^1..B^4 equal the reference tables exactly".into())
    } else {
        verdict(false, format!("mismatch in {} (max |diff| {worst:.2e})", mismatched.join(", ")))
    }
}

fn kraus_completeness(ks: &KrausSet) -> Verdict {
    let v = ks.completeness_violation()?;
    verdict(v <= OPERATOR_TOL, format!("max |sum K^dag K - I| = {v:.2e}"))
}

fn projector_rank(ks: &KrausSet) -> Verdict {
    let mut worst: f64 = 0.0;
    for i in 1..=4 {
        let p = ks.measurement(i)?;
        worst = worst.max(p.matmul(&p)?.max_abs_diff(&p)?);
        worst = worst.max(p.hermitian_violation()?);
        if worst > OPERATOR_TOL {
            return verdict(false, format!("A^{i}/2 is not an orthogonal projector (deviation {worst:.2e})"));
        }
        let rank = eig_hermitian(&p)?.values.iter().filter(|&&x| x > 0.5).count();
        if rank != 2 {
            return verdict(false, format!("A^{i}/2 has rank {rank}"));
        }
    }
    verdict(true, format!("A^i/2 are rank-2 projectors (max deviation {worst:.2e})"))
}

fn correction_unitarity(ks: &KrausSet) -> Verdict {
    let mut worst: f64 = 0.0;
    for b in ks.b_ops() {
        worst = worst.max(b.unitarity_violation()?);
    }
    verdict(worst <= OPERATOR_TOL, format!("max |B^dag B - I| = {worst:.2e}"))
}

fn bell_orthonormality() -> Verdict {
    let basis = bell_basis();
    let mut worst = basis.gram().max_abs_diff(&ComplexMatrix::identity(4))?;
    let f = Factorization::qubits(2)?;
    let half = ComplexMatrix::identity(2).scale_real(0.5);
    for i in 1..=4 {
        let p = basis.projector(i)?;
        for keep in [0, 1] {
            worst = worst.max(partial_trace(&p, &f, &[keep])?.max_abs_diff(&half)?);
        }
    }
    verdict(worst <= OPERATOR_TOL, format!("Gram and reduced-state deviation {worst:.2e}"))
}

fn swap_table() -> Verdict {
    let s = swap_gate(&Factorization::qubits(3)?, 0, 2)?;
    verdict(s == printed_swap(), "SWAP(1<->3) equals the reference table exactly".into())
}

fn corrections() -> Verdict {
    let standard = CorrectionSet::standard();
    let found = derive_corrections(1)?;
    for i in 1..=4 {
        let m = found.unitary(i)?.dagger().matmul(&standard.unitary(i)?)?;
        let lambda = m[(0, 0)];
        let off = m.max_abs_diff(&ComplexMatrix::identity(2).scale(lambda))?;
        if off > STATE_TOL || (lambda.norm() - 1.0).abs() > STATE_TOL {
            return verdict(false, format!("outcome {i}: found {} differs beyond a global phase", found.labels()[i - 1]));
        }
    }
    let mut labels = Vec::new();
    for j in 2..=4 {
        let set = derive_corrections(j)?;
        labels.push(format!("{j}:{}", set.labels().map(|l| l.to_string()).join(",")));
    }
    verdict(true, format!("resource 1 matches (I, X, Z, iY); derived {}", labels.join(" ")))
}

fn trace_preservation(ks: &KrausSet, count: usize, seed: u64) -> Verdict {
    let mut rng = seeded_rng(seed ^ 0x5eed_0001);
    let mut worst: f64 = 0.0;
    for n in 0..count {
        let rho = random_density(8, &mut rng);
        let out = match teleport_channel(&rho, ks) {
            Ok(out) => out,
            Err(e) => return verdict(false, format!("state {n}: output is not a valid density matrix ({e})")),
        };
        worst = worst.max((out.matrix().trace()?.re - 1.0).abs());
    }
    verdict(worst <= STATE_TOL, format!("{count} random states, max |tr - 1| = {worst:.2e}"))
}

fn fidelity_sweep(ks: &KrausSet, count: usize, seed: u64, tol: f64) -> Verdict {
    let mut sets = vec![ks.clone()];
    for j in 2..=4 {
        sets.push(kraus_set(j)?);
    }
    let f = Factorization::qubits(3)?;
    let mixed = DensityMatrix::maximally_mixed(4);
    let mut rng = seeded_rng(seed);
    let mut min_fid: f64 = 1.0;
    let mut worst_state: f64 = 0.0;
    for n in 0..count {
        let psi = haar_qubit(&mut rng);
        for set in &sets {
            let j = set.resource_index();
            let rho_in = build_initial_state(&psi, j)?;
            let p = outcome_probabilities(&rho_in, set)?;
            worst_state = p.iter().map(|x| (x - 0.25).abs()).fold(worst_state, f64::max);
            let out = match teleport_channel(&rho_in, set) {
                Ok(out) => out,
                Err(e) => return verdict(false, format!("state {n}, resource {j}: {e}")),
            };
            let m3 = validate_density(&partial_trace(out.matrix(), &f, &[2])?)?;
            let m12 = partial_trace(out.matrix(), &f, &[0, 1])?;
            worst_state = worst_state.max(m12.max_abs_diff(mixed.matrix())?);
            min_fid = min_fid.min(fidelity_pure(&psi.to_ket(), &m3)?);
        }
    }
    let detail = format!(
        "{count} Haar states x 4 resources, min fidelity {}, max state deviation {worst_state:.2e}",
        qteleport_core::json::format_sig12(min_fid)
    );
    verdict(min_fid >= 1.0 - tol && worst_state <= STATE_TOL, detail)
}

/// `kraus_set(1)` with entry (0, 6) of `A^1` zeroed.
pub fn corrupted_resource_one() -> Result<KrausSet> {
    let ks = kraus_set(1)?;
    let mut a = ks.a_ops().clone();
    a[0] = a[0].with_entry(0, 6, Complex64::new(0.0, 0.0))?;
    Ok(KrausSet::from_parts(1, a, ks.b_ops().clone(), ks.weight()))
}
