//! Problem instances, observables and their qubit encoding.
//!
//! Fermionic modes are numbered with the site index (row-major, `y * nx + x`)
//! varying fastest after the orbital, and spin slowest:
//!
//! ```text
//! mode = spin * (sites * orbitals) + site * orbitals + orbital
//! ```
//!
//! with spin up = 0 and spin down = 1. Jordan-Wigner parity strings follow
//! this order, so it is part of the public contract.

mod fermion;
mod hamiltonian;
mod jordan_wigner;
mod observable;
mod pauli;
mod spec;

pub use fermion::{normal_order, FermionOp, FermionTerm};
pub use hamiltonian::{build_hamiltonian, HamiltonianTerms, TermKind};
pub use jordan_wigner::{jordan_wigner, jordan_wigner_op, jordan_wigner_term};
pub use observable::{
    correlation_projectors, encode_observable, number_operator, FormFactor, ObservableSpec,
    ProjectorPiece,
};
pub use pauli::{Pauli, PauliOperatorSum, PauliString, MERGE_EPS};
pub use spec::{Boundary, HubbardSpec, Spin, SCHEMA_VERSION};

/// Encodes the Hamiltonian of `spec` as a Pauli sum.
pub fn encode_hamiltonian(spec: &HubbardSpec) -> crate::Result<PauliOperatorSum> {
    let terms = build_hamiltonian(spec)?;
    Ok(jordan_wigner(spec.n_modes(), &terms.terms))
}
