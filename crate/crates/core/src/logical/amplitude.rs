use alloc::format;
use core::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::{math, Error, Result};

/// Base of the outer logarithm in the total-iterate bound; the inner one is
/// always base 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LogConvention {
    #[default]
    Natural,
    Log10,
}

impl LogConvention {
    pub fn log(self, x: f64) -> f64 {
        match self {
            LogConvention::Natural => math::ln(x),
            LogConvention::Log10 => math::log10(x),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AmplitudeEstimationCost {
    pub epsilon: f64,
    pub delta_s: f64,
    pub convention: LogConvention,
    /// `floor(pi / (8 eps))` Grover iterates per circuit.
    pub iterates_per_circuit: u64,
    /// `(50 / eps) log((2 / delta_S) log2(pi / (4 eps)))` before rounding.
    pub total_iterates_real: f64,
    pub total_iterates: u64,
    /// `ceil(total_iterates / iterates_per_circuit)`
    pub shots: u64,
    /// `delta_S / shots`
    pub per_circuit_failure: f64,
}

/// Iterate and shot counts of iterative amplitude estimation to additive
/// precision `epsilon` with failure probability `delta_s`.
pub fn amplitude_estimation_cost(
    epsilon: f64,
    delta_s: f64,
    convention: LogConvention,
) -> Result<AmplitudeEstimationCost> {
    if !(epsilon > 0.0 && epsilon < 0.5) {
        return Err(Error::range(
            "epsilon",
            format!("{epsilon} not in (0, 1/2)"),
        ));
    }
    if !(delta_s > 0.0 && delta_s < 1.0) {
        return Err(Error::range("delta_S", format!("{delta_s} not in (0, 1)")));
    }
    let iterates_per_circuit = (math::floor(PI / (8.0 * epsilon)) as u64).max(1);
    let inner = (2.0 / delta_s) * math::log2(PI / (4.0 * epsilon));
    let total_iterates_real = (50.0 / epsilon) * convention.log(inner);
    let total_iterates = math::ceil_count(total_iterates_real);
    let shots = total_iterates.div_ceil(iterates_per_circuit).max(1);
    Ok(AmplitudeEstimationCost {
        epsilon,
        delta_s,
        convention,
        iterates_per_circuit,
        total_iterates_real,
        total_iterates,
        shots,
        per_circuit_failure: delta_s / shots as f64,
    })
}
