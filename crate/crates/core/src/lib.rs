//! Single-qubit teleportation realized inside one indivisible eight-level
//! system.
//!
//! The eight basis states `|n>` are read as three virtual qubits through the
//! binary expansion `n = 4a + 2b + c`. The Bell measurement on the first two
//! virtual qubits becomes a family of rank-2 projectors on the whole space,
//! and Bob's corrections become eight-dimensional unitaries; the input state
//! reappears on the third virtual qubit.
//!
//! ```
//! use qteleport_core::prelude::*;
//!
//! let psi = QubitState::plus_i();
//! let report = run_protocol(&psi, 1, Mode::Ensemble, 0).unwrap();
//! assert!((report.fidelity - 1.0).abs() < 1e-9);
//! assert!((report.output_entropy_bits - 2.0).abs() < 1e-9);
//! ```

pub mod eigen;
pub mod error;
pub mod factorization;
pub mod json;
pub mod matrix;
pub mod protocol;
pub mod random;
pub mod state;

pub use eigen::{eig_hermitian, eig_hermitian_with, HermitianEigen, JacobiOptions};
pub use error::{Error, Result};
pub use factorization::{partial_trace, reduce, Factorization};
pub use matrix::{pauli, ComplexMatrix};
pub use num_complex::Complex64;
pub use state::{
    fidelity_pure, ket_to_density, purity, validate_density, von_neumann_entropy, DensityMatrix, Ket, QubitState,
};

pub mod prelude {
    pub use crate::protocol::*;
    pub use crate::{
        eig_hermitian, fidelity_pure, ket_to_density, partial_trace, pauli, purity, validate_density,
        von_neumann_entropy, Complex64, ComplexMatrix, DensityMatrix, Error, Factorization, Ket, QubitState,
        Result,
    };
}
