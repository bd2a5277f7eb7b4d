use alloc::format;

use serde::{Deserialize, Serialize};

use super::amplitude::{amplitude_estimation_cost, LogConvention};
use crate::{math, Error, Result};

/// Where the shot count of a dynamic-correlation run comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShotsSource {
    /// A shot count supplied by the caller.
    Reference,
    /// The amplitude-estimation iterate bound.
    Formula,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DynamicOptions {
    /// Significant figures kept in the per-circuit failure before it feeds the
    /// QSP chain. `None` keeps full precision.
    pub failure_sig_figs: Option<u32>,
    pub convention: LogConvention,
}

impl Default for DynamicOptions {
    fn default() -> Self {
        DynamicOptions {
            failure_sig_figs: Some(2),
            convention: LogConvention::Natural,
        }
    }
}

/// Per-circuit success probability each QSP block must reach, and the
/// matching polynomial precision.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QspChain {
    pub per_circuit_failure: f64,
    pub applications: u64,
    pub p_qsp: f64,
    pub epsilon_qsp: f64,
}

impl QspChain {
    /// `p_qsp^applications`, the success probability of a whole circuit.
    pub fn circuit_success(&self) -> f64 {
        math::powf(self.p_qsp, self.applications as f64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DynamicCircuitParams {
    pub epsilon: f64,
    pub delta: f64,
    pub shots: u64,
    pub shots_source: ShotsSource,
    /// Shot count implied by the iterate bound, reported alongside a
    /// reference count.
    pub shots_formula: u64,
    /// `4 floor(pi / (8 eps))`: each Grover iterate applies `U(t)` and
    /// `U(-t)` once in `V` and once in `V^dagger`.
    pub u_t_per_circuit: u64,
    /// `delta / shots` before rounding.
    pub per_circuit_failure_exact: f64,
    pub per_circuit_failure: f64,
    pub p_qsp: f64,
    pub epsilon_qsp: f64,
}

impl DynamicCircuitParams {
    pub fn chain(&self) -> QspChain {
        QspChain {
            per_circuit_failure: self.per_circuit_failure,
            applications: self.u_t_per_circuit,
            p_qsp: self.p_qsp,
            epsilon_qsp: self.epsilon_qsp,
        }
    }
}

pub fn per_circuit_failure(shots: u64, delta: f64) -> Result<f64> {
    if shots == 0 {
        return Err(Error::range("shots", "must be at least 1"));
    }
    Ok(delta / shots as f64)
}

/// Rounds to `figures` significant decimal figures. Zero and non-finite
/// values pass through.
pub fn round_sig_figs(x: f64, figures: u32) -> f64 {
    if x == 0.0 || !x.is_finite() || figures == 0 {
        return x;
    }
    let magnitude = math::floor(math::log10(math::abs(x))) as i32;
    let shift = figures as i32 - 1 - magnitude;
    if shift >= 0 {
        let scale = math::powf(10.0, shift as f64);
        math::round(x * scale) / scale
    } else {
        let scale = math::powf(10.0, -shift as f64);
        math::round(x / scale) * scale
    }
}

/// `p_qsp = (1 - f)^(1/n)` and `eps_qsp = (1 - p_qsp) / 2`, computed through
/// `ln(1 + x)` and `exp(x) - 1` so that tiny failures keep their digits.
/// `p_qsp` is nudged up by at most a few ulps so that `p_qsp^n >= 1 - f`
/// holds in floating point.
pub fn qsp_success_chain(per_circuit_failure: f64, applications: u64) -> Result<QspChain> {
    if !(0.0..1.0).contains(&per_circuit_failure) {
        return Err(Error::range(
            "per_circuit_failure",
            format!("{per_circuit_failure} not in [0, 1)"),
        ));
    }
    if applications == 0 {
        return Err(Error::range("applications", "must be at least 1"));
    }
    let n = applications as f64;
    let log_p = math::ln_1p(-per_circuit_failure) / n;
    let mut p_qsp = math::exp(log_p);
    let target = 1.0 - per_circuit_failure;
    for _ in 0..8 {
        if p_qsp >= 1.0 || math::powf(p_qsp, n) >= target {
            break;
        }
        p_qsp = p_qsp.next_up();
    }
    let p_qsp = p_qsp.min(1.0);
    let epsilon_qsp = (-math::exp_m1(log_p) / 2.0).max(0.0);
    Ok(QspChain {
        per_circuit_failure,
        applications,
        p_qsp,
        epsilon_qsp,
    })
}

/// Circuit parameters of a dynamic correlation estimate at precision
/// `epsilon` and overall failure tolerance `delta`. The shot count is
/// `shots_reference` when given, otherwise the iterate bound evaluated at
/// `delta_S = delta / 2`.
pub fn dynamic_circuit_params(
    epsilon: f64,
    delta: f64,
    shots_reference: Option<u64>,
    options: DynamicOptions,
) -> Result<DynamicCircuitParams> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::range("delta", format!("{delta} not in (0, 1)")));
    }
    let amplitude = amplitude_estimation_cost(epsilon, delta / 2.0, options.convention)?;
    let (shots, shots_source) = match shots_reference {
        Some(s) => (s, ShotsSource::Reference),
        None => (amplitude.shots, ShotsSource::Formula),
    };
    let exact = per_circuit_failure(shots, delta)?;
    let failure = match options.failure_sig_figs {
        Some(f) => round_sig_figs(exact, f),
        None => exact,
    };
    let u_t_per_circuit = 4 * amplitude.iterates_per_circuit;
    let chain = qsp_success_chain(failure, u_t_per_circuit)?;
    Ok(DynamicCircuitParams {
        epsilon,
        delta,
        shots,
        shots_source,
        shots_formula: amplitude.shots,
        u_t_per_circuit,
        per_circuit_failure_exact: exact,
        per_circuit_failure: failure,
        p_qsp: chain.p_qsp,
        epsilon_qsp: chain.epsilon_qsp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn per_circuit_examples() {
        assert_eq!(per_circuit_failure(1, 0.3).unwrap(), 0.3);
        assert_eq!(per_circuit_failure(1000, 0.01).unwrap(), 1e-5);
        assert!((per_circuit_failure(671, 0.001).unwrap() - 1.4903e-6).abs() < 1e-10);
        assert!(per_circuit_failure(0, 0.1).is_err());
    }

    #[test]
    fn sig_figs() {
        assert_eq!(round_sig_figs(1.4903e-6, 2), 1.5e-6);
        assert_eq!(round_sig_figs(123456.0, 3), 123000.0);
        assert_eq!(round_sig_figs(-0.0449, 2), -0.045);
        assert_eq!(round_sig_figs(0.0, 2), 0.0);
    }

    #[test]
    fn chain_of_zero_failure_is_exact() {
        let c = qsp_success_chain(0.0, 156).unwrap();
        assert_eq!(c.p_qsp, 1.0);
        assert_eq!(c.epsilon_qsp, 0.0);
    }

    #[test]
    fn chain_closes() {
        for &(f, n) in &[(1.5e-6, 156), (1e-3, 7), (0.2, 3), (1e-12, 1000)] {
            let c = qsp_success_chain(f, n).unwrap();
            assert!(c.circuit_success() >= 1.0 - f);
            assert!((2.0 * c.epsilon_qsp - (1.0 - c.p_qsp)).abs() < 1e-15);
        }
    }

    #[test]
    fn reference_shots_give_rounded_failure() {
        let p = dynamic_circuit_params(0.01, 0.001, Some(671), DynamicOptions::default()).unwrap();
        assert_eq!(p.u_t_per_circuit, 156);
        assert_eq!(p.per_circuit_failure, 1.5e-6);
        assert_eq!(p.shots_source, ShotsSource::Reference);
        assert_eq!(p.shots_formula, 1300);
        let q = dynamic_circuit_params(0.01, 0.001, None, DynamicOptions::default()).unwrap();
        assert_eq!(q.shots, 1300);
        assert_eq!(q.shots_source, ShotsSource::Formula);
    }
}
