use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::config::ArchitectureConfig;
use super::layout::{code_distance, provision_layout, PhysicalLayout};
use super::runtime::{runtime_breakdown, t_demand, RuntimeBreakdown};
use crate::logical::{logical_cost_report, LogicalCostInputs, LogicalCostReport};
use crate::model::HubbardSpec;
use crate::{math, Result};

/// System qubits plus the block-encoding prepare register
/// (`ceil(log2 L)` qubits), the QSP signal qubit and the amplitude-estimation
/// ancilla.
pub fn logical_qubit_count(system_qubits: usize, n_terms: usize) -> u64 {
    let prepare = if n_terms > 1 {
        math::ceil_count(math::log2(n_terms as f64))
    } else {
        0
    };
    system_qubits as u64 + prepare + 2
}

/// Physical footprint and runtime of the dynamic-correlation run described by
/// a logical cost report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhysicalEstimate {
    pub lattice: String,
    pub logical_qubits: u64,
    pub t_per_circuit: u64,
    pub total_t: u64,
    /// Logical operations per circuit: logical qubits times logical layers.
    pub circuit_volume: f64,
    /// `delta_data` divided evenly over the circuit volume.
    pub per_operation_budget: f64,
    /// Distillation failure accumulated over one circuit.
    pub distillation_failure: f64,
    pub distillation_within_budget: bool,
    pub layout: PhysicalLayout,
    pub runtime: RuntimeBreakdown,
}

impl PhysicalEstimate {
    pub fn row(&self) -> SweepRow {
        SweepRow {
            lattice: self.lattice.clone(),
            bus_qubits: self.layout.bus_qubits,
            runtime_s: self.runtime.total_seconds,
            share_t: self.runtime.share_t,
            share_inter: self.runtime.share_inter,
            share_intra: self.runtime.share_intra,
            factory_qubits: self.layout.factory_qubits,
            logical_qubits: self.logical_qubits,
            t_count: self.total_t,
        }
    }
}

/// One lattice of a physical sweep, in plot-ready form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub lattice: String,
    pub bus_qubits: u64,
    pub runtime_s: f64,
    pub share_t: f64,
    pub share_inter: f64,
    pub share_intra: f64,
    pub factory_qubits: u64,
    pub logical_qubits: u64,
    pub t_count: u64,
}

pub fn physical_estimate(
    report: &LogicalCostReport,
    lattice: &str,
    config: &ArchitectureConfig,
) -> Result<PhysicalEstimate> {
    config.validate()?;
    let logical_qubits = logical_qubit_count(report.n_qubits, report.n_terms);
    let t_per_circuit = report.dynamic_t.per_circuit;
    let circuit_volume = logical_qubits as f64 * t_per_circuit as f64 * config.layers_per_t;
    let delta_data = report.budget.delta_data;
    let per_operation_budget = if circuit_volume > 0.0 {
        delta_data / circuit_volume
    } else {
        delta_data
    };
    let distance = code_distance(per_operation_budget, config)?;
    let demand = if report.dynamic_t.total > 0 {
        t_demand(distance, config)
    } else {
        0.0
    };
    let layout = provision_layout(logical_qubits, demand, distance, config)?;
    let runtime = runtime_breakdown(report.dynamic_t.total, &layout, config)?;
    let distillation_failure = t_per_circuit as f64 * config.factory.output_error;
    Ok(PhysicalEstimate {
        lattice: String::from(lattice),
        logical_qubits,
        t_per_circuit,
        total_t: report.dynamic_t.total,
        circuit_volume,
        per_operation_budget,
        distillation_failure,
        distillation_within_budget: distillation_failure <= report.budget.delta_dist,
        layout,
        runtime,
    })
}

/// Square lattices from 2x2 to 7x7.
pub fn default_sweep_sizes() -> Vec<(usize, usize)> {
    (2..=7).map(|n| (n, n)).collect()
}

/// Logical and physical estimate of one lattice.
pub fn lattice_estimate(
    spec: &HubbardSpec,
    inputs: &LogicalCostInputs,
    config: &ArchitectureConfig,
) -> Result<(LogicalCostReport, PhysicalEstimate)> {
    let report = logical_cost_report(spec, inputs)?;
    let label = format!("{}x{}", spec.nx, spec.ny);
    let estimate = physical_estimate(&report, &label, config)?;
    Ok((report, estimate))
}

/// Sequential sweep over lattice sizes.
pub fn lattice_sweep(
    sizes: &[(usize, usize)],
    make_spec: impl Fn(usize, usize) -> HubbardSpec,
    inputs: &LogicalCostInputs,
    config: &ArchitectureConfig,
) -> Result<Vec<PhysicalEstimate>> {
    sizes
        .iter()
        .map(|&(nx, ny)| lattice_estimate(&make_spec(nx, ny), inputs, config).map(|(_, e)| e))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn logical_qubits() {
        assert_eq!(logical_qubit_count(8, 0), 10);
        assert_eq!(logical_qubit_count(8, 1), 10);
        assert_eq!(logical_qubit_count(8, 20), 15);
    }

    #[test]
    fn two_by_two_estimate() {
        let spec = HubbardSpec::single_orbital(2, 2, 1.0, 2.0, 1.0);
        let (_, e) = lattice_estimate(
            &spec,
            &LogicalCostInputs::default(),
            &ArchitectureConfig::default(),
        )
        .unwrap();
        assert_eq!(e.lattice, "2x2");
        assert!(e.layout.distance >= 3 && e.layout.distance % 2 == 1);
        assert!((e.runtime.share_sum() - 1.0).abs() < 1e-12);
        assert!(e.layout.bus_qubits + e.layout.factory_qubits <= e.layout.capacity);
    }
}
