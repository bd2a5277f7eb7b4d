//! Dense exact diagonalization for desk-scale instances.
//!
//! Basis state `b` of an `n`-qubit register stores qubit `q` in bit
//! `n - 1 - q`, so qubit 0 is the most significant bit and `Z_0` on two
//! qubits is `diag(1, 1, -1, -1)`. Under Jordan-Wigner a set bit marks an
//! occupied mode and the popcount of `b` is the particle number.

mod dense;
mod dynamics;
mod eigen;
mod ground;

pub use dense::{apply_pauli_sum, realize_dense, DenseOperator, MAX_DENSE_MODES};
pub use dynamics::{dynamic_correlation, time_grid, CorrelationTrace, SpectralComponent};
pub use eigen::{hermitian_eigen, EigenDecomposition};
pub use ground::{
    diagonalize, expectation, ground_state, static_expectation, GroundStateResult, Spectrum,
    SpectrumBlock, DEGENERACY_TOL, HERMITICITY_TOL,
};
