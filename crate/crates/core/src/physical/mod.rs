//! Analytic physical-layer model of a two-fridge, measurement-based
//! surface-code machine: code distance, bus and factory allocation, and the
//! split of runtime between distillation, intermodule and intramodule work.
//!
//! The model is a parameterized stand-in for a full compilation pipeline.
//! Its absolute numbers follow from the configured constants; its trends in
//! T count and lattice size are what it is meant to capture.

mod config;
mod estimate;
mod layout;
mod runtime;

pub use config::{ArchitectureConfig, FactoryRecipe};
pub use estimate::{
    default_sweep_sizes, lattice_estimate, lattice_sweep, logical_qubit_count, physical_estimate,
    PhysicalEstimate, SweepRow,
};
pub use layout::{bus_qubits, code_distance, provision_layout, PhysicalLayout};
pub use runtime::{runtime_breakdown, t_demand, RuntimeBreakdown};
