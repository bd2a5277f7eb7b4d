use serde::{Deserialize, Serialize};

use super::amplitude::{amplitude_estimation_cost, AmplitudeEstimationCost};
use super::budget::{split_budget, AccuracyBudget};
use super::dynamic::{dynamic_circuit_params, DynamicCircuitParams, DynamicOptions};
use super::gsp::{gsp_queries, GspCost};
use super::tcount::{
    dynamic_t_count, static_t_count, task_count, DynamicTCount, StaticTCount, TGateModel,
};
use crate::model::{encode_hamiltonian, HubbardSpec};
use crate::Result;

/// Shot count of the reference dynamic-correlation run at
/// `eps = 0.01, delta = 0.001`.
pub const REFERENCE_SHOTS: u64 = 671;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LogicalCostInputs {
    pub epsilon: f64,
    pub delta: f64,
    /// Evolution time of the dynamic correlator.
    pub time: f64,
    /// Shot count used instead of the iterate bound when set.
    pub shots_reference: Option<u64>,
    pub dynamic: DynamicOptions,
    pub gates: TGateModel,
    pub gsp_constant: f64,
    /// Initial-state overlap lower bound; static costs need it and `gap`.
    pub gamma: Option<f64>,
    /// Spectral gap lower bound.
    pub gap: Option<f64>,
}

impl Default for LogicalCostInputs {
    fn default() -> Self {
        LogicalCostInputs {
            epsilon: 0.01,
            delta: 0.001,
            time: 0.1,
            shots_reference: Some(REFERENCE_SHOTS),
            dynamic: DynamicOptions::default(),
            gates: TGateModel::default(),
            gsp_constant: 1.0,
            gamma: None,
            gap: None,
        }
    }
}

/// Every intermediate of the logical cost chain for one lattice.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogicalCostReport {
    pub inputs: LogicalCostInputs,
    pub n_sites: usize,
    pub n_qubits: usize,
    pub n_terms: usize,
    pub alpha: f64,
    pub budget: AccuracyBudget,
    pub amplitude: AmplitudeEstimationCost,
    /// True when a reference shot count is in use and differs from the
    /// iterate bound.
    pub shots_discrepancy: bool,
    pub dynamic: DynamicCircuitParams,
    pub dynamic_t: DynamicTCount,
    pub tasks: u64,
    pub gsp: Option<GspCost>,
    pub gsp_per_circuit: Option<u64>,
    pub static_t: Option<StaticTCount>,
}

pub fn logical_cost_report(
    spec: &HubbardSpec,
    inputs: &LogicalCostInputs,
) -> Result<LogicalCostReport> {
    let hamiltonian = encode_hamiltonian(spec)?;
    let budget = split_budget(inputs.delta)?;
    let amplitude =
        amplitude_estimation_cost(inputs.epsilon, budget.delta_s, inputs.dynamic.convention)?;
    let dynamic = dynamic_circuit_params(
        inputs.epsilon,
        inputs.delta,
        inputs.shots_reference,
        inputs.dynamic,
    )?;
    let dynamic_t = dynamic_t_count(
        &hamiltonian,
        inputs.time,
        &dynamic,
        budget.delta_syn,
        &inputs.gates,
    )?;
    let n_sites = spec.n_sites();
    let (gsp, gsp_per_circuit, static_t) = match (inputs.gamma, inputs.gap) {
        (Some(gamma), Some(gap)) => {
            let alpha = hamiltonian.alpha();
            let g = gsp_queries(alpha, gamma, gap, budget.delta_gs, inputs.gsp_constant)?;
            let t_h = inputs
                .gates
                .t_h(hamiltonian.term_count(), budget.delta_syn)?;
            let t_0 = inputs.gates.t_0(hamiltonian.n_qubits());
            let s = static_t_count(
                alpha,
                gamma,
                gap,
                inputs.epsilon,
                inputs.delta,
                t_h,
                t_0,
                inputs.gsp_constant,
            )?;
            (Some(g), Some(g.per_circuit(inputs.epsilon)), Some(s))
        }
        _ => (None, None, None),
    };
    Ok(LogicalCostReport {
        inputs: *inputs,
        n_sites,
        n_qubits: hamiltonian.n_qubits(),
        n_terms: hamiltonian.term_count(),
        alpha: hamiltonian.alpha(),
        budget,
        shots_discrepancy: dynamic.shots != dynamic.shots_formula,
        amplitude,
        dynamic,
        dynamic_t,
        tasks: task_count(n_sites as u64),
        gsp,
        gsp_per_circuit,
        static_t,
    })
}
