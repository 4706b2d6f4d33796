//! Teleportation of one qubit between virtual factors of a single
//! eight-level system.

pub mod bell;
pub mod channel;
pub mod kraus;
pub mod report;
pub mod swap;
pub mod tables;

pub use bell::{bell_basis, index_from_bits, index_map, BellBasis};
pub use channel::{
    build_initial_state, outcome_probabilities, post_measurement_state, single_shot, single_shot_with_rng,
    teleport_channel, Shot,
};
pub use kraus::{derive_corrections, kraus_set, CorrectionSet, KrausSet, Pauli, Phase, PhasedPauli};
pub use report::{run_protocol, Mode, ProtocolReport};
pub use swap::{compare_swap_vs_teleport, swap_gate, BranchSummary, SwapComparison};
