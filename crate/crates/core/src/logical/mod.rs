//! Closed-form logical cost model: failure-budget split, amplitude
//! estimation, ground-state preparation, the QSP precision chain and T
//! counts.
//!
//! Every count is the ceiling of its real-valued formula, with values within
//! a relative 1e-12 of an integer taken as that integer.

mod amplitude;
mod budget;
mod dynamic;
mod gsp;
mod report;
mod tcount;

pub use amplitude::{amplitude_estimation_cost, AmplitudeEstimationCost, LogConvention};
pub use budget::{split_budget, AccuracyBudget};
pub use dynamic::{
    dynamic_circuit_params, per_circuit_failure, qsp_success_chain, round_sig_figs,
    DynamicCircuitParams, DynamicOptions, QspChain, ShotsSource,
};
pub use gsp::{gsp_queries, GspCost};
pub use report::{logical_cost_report, LogicalCostInputs, LogicalCostReport};
pub use tcount::{
    dynamic_t_count, qsp_degree, static_t_count, task_count, DynamicTCount, StaticTCount,
    TGateModel,
};
