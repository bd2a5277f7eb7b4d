//! Numerical core for fault-tolerant resource estimation of Fermi-Hubbard
//! simulations.
//!
//! The crate is `no_std` (it needs `alloc`) and performs no IO. It covers:
//!
//! * [`model`]: lattice problem instances, observables and their
//!   Jordan-Wigner encoding into weighted Pauli sums.
//! * [`oracle`]: dense exact diagonalization for desk-scale instances, static
//!   expectation values and time-domain correlation functions.
//! * [`signal`]: the resolution study for spectral peak recovery under
//!   worst-case bounded noise.
//! * [`logical`]: closed-form logical cost expressions (amplitude
//!   estimation, ground-state preparation, QSP precision chain, T counts).
//! * [`physical`]: an analytic surface-code / two-module architecture model.
//! * [`utility`]: the Monte Carlo net-present-value utility model.
//!
//! File formats, the CLI and parallel sweeps live in the companion `hubbard`
//! crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(any(feature = "std", test))]
extern crate std;

pub mod error;
pub mod logical;
pub(crate) mod math;
pub mod model;
pub mod oracle;
pub mod physical;
pub mod seed;
pub mod signal;
pub mod utility;

pub use error::{Error, Result};
pub use num_complex::Complex64;
