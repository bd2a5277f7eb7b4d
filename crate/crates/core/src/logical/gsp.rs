use alloc::format;
use core::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::{math, Error, Result};

/// Block-encoding queries needed to prepare a ground state by filtering from
/// an initial state with overlap at least `gamma`, given a gap lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GspCost {
    pub alpha: f64,
    pub gamma: f64,
    pub gap: f64,
    pub constant: f64,
    pub delta_gs: f64,
    /// `C alpha / (gamma gap) ln(1 / (gamma delta_gs))` before rounding.
    pub queries_real: f64,
    pub queries: u64,
}

impl GspCost {
    /// Query bound for the state preparations inside one amplitude-estimation
    /// circuit, `pi / (4 eps)` times the single-preparation bound.
    pub fn per_circuit_real(&self, epsilon: f64) -> f64 {
        PI / (4.0 * epsilon) * self.queries_real
    }

    pub fn per_circuit(&self, epsilon: f64) -> u64 {
        math::ceil_count(self.per_circuit_real(epsilon))
    }
}

pub fn gsp_queries(
    alpha: f64,
    gamma: f64,
    gap: f64,
    delta_gs: f64,
    constant: f64,
) -> Result<GspCost> {
    for (what, v) in [
        ("alpha", alpha),
        ("gamma", gamma),
        ("gap", gap),
        ("delta_gs", delta_gs),
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
    if delta_gs >= 1.0 {
        return Err(Error::range(
            "delta_gs",
            format!("{delta_gs} not in (0, 1)"),
        ));
    }
    let queries_real = constant * alpha / (gamma * gap) * math::ln(1.0 / (gamma * delta_gs));
    Ok(GspCost {
        alpha,
        gamma,
        gap,
        constant,
        delta_gs,
        queries_real,
        queries: math::ceil_count(queries_real),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_case() {
        let c = gsp_queries(1.0, 1.0, 1.0, core::f64::consts::E.recip(), 1.0).unwrap();
        assert_eq!(c.queries, 1);
    }

    #[test]
    fn linear_in_alpha() {
        let a = gsp_queries(3.0, 0.5, 0.2, 1e-4, 1.0).unwrap();
        let b = gsp_queries(6.0, 0.5, 0.2, 1e-4, 1.0).unwrap();
        assert_eq!(b.queries_real, 2.0 * a.queries_real);
    }

    #[test]
    fn per_circuit_scale() {
        let a = gsp_queries(1.0, 1.0, 1.0, 1e-3, 1.0).unwrap();
        assert!((a.per_circuit_real(PI / 4.0) - a.queries_real).abs() < 1e-12);
    }

    #[test]
    fn rejects_overlap_above_one() {
        assert!(matches!(
            gsp_queries(1.0, 1.5, 1.0, 0.1, 1.0),
            Err(Error::Contract(_))
        ));
        assert!(gsp_queries(1.0, 0.5, 0.0, 0.1, 1.0).is_err());
    }
}
