use alloc::format;
use core::f64::consts::{E, PI};

use serde::{Deserialize, Serialize};

use super::dynamic::DynamicCircuitParams;
use crate::model::PauliOperatorSum;
use crate::{math, Error, Result};

/// T-gate cost model of one block-encoding query and of the reflection about
/// the all-zeros state.
///
/// A query costs `select_t_per_term * L` T gates for the select oracle plus
/// `prepare_rotations_per_bit * ceil(log2 L)` synthesized rotations for the
/// prepare oracle. A rotation at precision `delta` costs
/// `ceil(synthesis_slope * log2(1 / delta)) + synthesis_offset` T gates. The
/// reflection on `n` qubits costs `reflection_t_per_qubit * (n - 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TGateModel {
    pub select_t_per_term: u64,
    pub prepare_rotations_per_bit: u64,
    pub synthesis_slope: f64,
    pub synthesis_offset: u64,
    pub reflection_t_per_qubit: u64,
}

impl Default for TGateModel {
    fn default() -> Self {
        TGateModel {
            select_t_per_term: 4,
            prepare_rotations_per_bit: 2,
            synthesis_slope: 1.15,
            synthesis_offset: 9,
            reflection_t_per_qubit: 4,
        }
    }
}

impl TGateModel {
    pub fn rotation_t(&self, delta: f64) -> Result<u64> {
        if !(delta > 0.0 && delta < 1.0) {
            return Err(Error::range(
                "rotation precision",
                format!("{delta} not in (0, 1)"),
            ));
        }
        Ok(
            math::ceil_count(self.synthesis_slope * math::log2(1.0 / delta))
                + self.synthesis_offset,
        )
    }

    pub fn prepare_rotations(&self, n_terms: usize) -> u64 {
        if n_terms <= 1 {
            return 0;
        }
        self.prepare_rotations_per_bit * math::ceil_count(math::log2(n_terms as f64))
    }

    /// `T_H` for `n_terms` Pauli terms with every prepare rotation synthesized
    /// to precision `delta`.
    pub fn t_h(&self, n_terms: usize, delta: f64) -> Result<u64> {
        if n_terms == 0 {
            return Ok(0);
        }
        let rotations = self.prepare_rotations(n_terms);
        let rotation_t = if rotations == 0 {
            0
        } else {
            self.rotation_t(delta)?
        };
        Ok(self.select_t_per_term * n_terms as u64 + rotations * rotation_t)
    }

    pub fn t_0(&self, n_qubits: usize) -> u64 {
        self.reflection_t_per_qubit * n_qubits.saturating_sub(1) as u64
    }
}

/// T counts of static correlation estimation: ground-state preparation by
/// filtering inside every Grover iterate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StaticTCount {
    pub alpha: f64,
    pub gamma: f64,
    pub gap: f64,
    pub epsilon: f64,
    pub delta_bar: f64,
    pub constant: f64,
    pub t_h: u64,
    pub t_0: u64,
    pub per_circuit_real: f64,
    pub per_circuit: u64,
    pub total_real: f64,
    pub total: u64,
}

/// `per_circuit = (pi C alpha / (8 gamma gap eps)) ln(1 / (gamma delta_gs)) (2 T_H + T_0)`
/// and `total = (50 C alpha / (gamma gap eps)) ln((4 / delta_bar) log2(pi / (4 eps)))
/// ln(8 / (gamma delta_bar)) (2 T_H + T_0)` with `delta_gs = delta_bar / 8`.
#[allow(clippy::too_many_arguments)]
pub fn static_t_count(
    alpha: f64,
    gamma: f64,
    gap: f64,
    epsilon: f64,
    delta_bar: f64,
    t_h: u64,
    t_0: u64,
    constant: f64,
) -> Result<StaticTCount> {
    for (what, v) in [
        ("alpha", alpha),
        ("gamma", gamma),
        ("gap", gap),
        ("epsilon", epsilon),
        ("delta_bar", delta_bar),
        ("constant", constant),
    ] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::range(what, format!("{v} is not positive")));
        }
    }
    if gamma > 1.0 {
        return Err(Error::contract(format!(
            "overlap bound gamma = {gamma} exceeds 1"
        )));
    }
    if epsilon >= 0.5 {
        return Err(Error::range(
            "epsilon",
            format!("{epsilon} not in (0, 1/2)"),
        ));
    }
    if delta_bar >= 1.0 {
        return Err(Error::range(
            "delta_bar",
            format!("{delta_bar} not in (0, 1)"),
        ));
    }
    let delta_gs = delta_bar / 8.0;
    let scale = constant * alpha / (gamma * gap * epsilon);
    let gate = (2 * t_h + t_0) as f64;
    let per_circuit_real = PI / 8.0 * scale * math::ln(1.0 / (gamma * delta_gs)) * gate;
    let total_real = 50.0
        * scale
        * math::ln((4.0 / delta_bar) * math::log2(PI / (4.0 * epsilon)))
        * math::ln(8.0 / (gamma * delta_bar))
        * gate;
    Ok(StaticTCount {
        alpha,
        gamma,
        gap,
        epsilon,
        delta_bar,
        constant,
        t_h,
        t_0,
        per_circuit_real,
        per_circuit: math::ceil_count(per_circuit_real),
        total_real,
        total: math::ceil_count(total_real),
    })
}

/// Amplitude-estimation tasks for all two-point correlators on `n_sites`
/// sites.
pub fn task_count(n_sites: u64) -> u64 {
    2 * n_sites * n_sites.saturating_sub(1)
}

/// Smallest QSP degree `d` with `(e alpha |t| / (2 d))^d <= eps_qsp`. When
/// `alpha |t| < 1` the degree is capped at `ceil(ln(1 / eps_qsp))`. Zero
/// evolution time needs no queries.
pub fn qsp_degree(alpha: f64, t: f64, epsilon_qsp: f64) -> Result<u64> {
    if !(epsilon_qsp > 0.0 && epsilon_qsp < 1.0) {
        return Err(Error::contract(format!(
            "QSP precision {epsilon_qsp} not in (0, 1)"
        )));
    }
    let a = alpha * math::abs(t);
    if !(a >= 0.0 && a.is_finite()) {
        return Err(Error::range(
            "alpha |t|",
            format!("{a} is not finite and nonnegative"),
        ));
    }
    if a == 0.0 {
        return Ok(0);
    }
    let c = E * a / 2.0;
    let target = math::ln(epsilon_qsp);
    // Below d = c the base exceeds one, so the search starts there.
    let mut d = (math::floor(c) as u64).max(1);
    while (d as f64) * math::ln(c / d as f64) > target {
        d += 1;
    }
    if a < 1.0 {
        d = d.min(math::ceil_count(math::ln(1.0 / epsilon_qsp)));
    }
    Ok(d)
}

/// T counts of dynamic correlation estimation, where each circuit applies
/// `U(t)` a fixed number of times and each `U(t)` is a degree-`d` QSP
/// sequence of block-encoding queries.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DynamicTCount {
    pub n_terms: usize,
    pub alpha: f64,
    pub time: f64,
    pub qsp_degree: u64,
    /// Synthesized rotations per circuit: prepare rotations of every query
    /// plus `d + 1` QSP phase rotations per `U(t)`.
    pub rotations_per_circuit: u64,
    /// Synthesis budget shared evenly by the rotations of one circuit.
    pub delta_rotation: f64,
    pub rotation_t: u64,
    pub t_h: u64,
    pub phase_t_per_u: u64,
    pub t_per_u: u64,
    pub u_t_per_circuit: u64,
    pub shots: u64,
    pub per_circuit: u64,
    pub total: u64,
}

pub fn dynamic_t_count(
    model: &PauliOperatorSum,
    time: f64,
    params: &DynamicCircuitParams,
    delta_syn: f64,
    gates: &TGateModel,
) -> Result<DynamicTCount> {
    if !(delta_syn > 0.0 && delta_syn < 1.0) {
        return Err(Error::range(
            "delta_syn",
            format!("{delta_syn} not in (0, 1)"),
        ));
    }
    let n_terms = model.term_count();
    let alpha = model.alpha();
    let mut out = DynamicTCount {
        n_terms,
        alpha,
        time,
        qsp_degree: 0,
        rotations_per_circuit: 0,
        delta_rotation: delta_syn,
        rotation_t: 0,
        t_h: 0,
        phase_t_per_u: 0,
        t_per_u: 0,
        u_t_per_circuit: params.u_t_per_circuit,
        shots: params.shots,
        per_circuit: 0,
        total: 0,
    };
    if n_terms == 0 {
        return Ok(out);
    }
    let d = qsp_degree(alpha, time, params.epsilon_qsp)?;
    out.qsp_degree = d;
    if d == 0 {
        return Ok(out);
    }
    let prepare = gates.prepare_rotations(n_terms);
    let rotations_per_u = d * prepare + d + 1;
    out.rotations_per_circuit = params.u_t_per_circuit * rotations_per_u;
    out.delta_rotation = delta_syn / out.rotations_per_circuit as f64;
    out.rotation_t = gates.rotation_t(out.delta_rotation)?;
    out.t_h = gates.select_t_per_term * n_terms as u64 + prepare * out.rotation_t;
    out.phase_t_per_u = (d + 1) * out.rotation_t;
    out.t_per_u = d * out.t_h + out.phase_t_per_u;
    out.per_circuit = params.u_t_per_circuit * out.t_per_u;
    out.total = params.shots.saturating_mul(out.per_circuit);
    Ok(out)
}
