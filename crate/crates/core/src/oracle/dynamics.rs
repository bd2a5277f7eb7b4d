use alloc::vec::Vec;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::dense::apply_pauli_sum;
use super::ground::{GroundStateResult, Spectrum};
use crate::model::PauliOperatorSum;
use crate::{math, Error, Result};

/// One exponential `weight * exp(i * frequency * t)` of a correlation
/// function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralComponent {
    pub frequency: f64,
    pub weight: Complex64,
}

/// `chi(t) = <psi| A(t) B(0) |psi>` on the grid `t_n = n dt`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationTrace {
    pub dt: f64,
    pub times: Vec<f64>,
    pub values: Vec<Complex64>,
    /// Exponentials whose sum reproduces `values`; frequencies are
    /// `E0 - E_n`.
    pub components: Vec<SpectralComponent>,
}

impl CorrelationTrace {
    /// Multiplies every value and weight by `factor`.
    pub fn scaled(mut self, factor: Complex64) -> Self {
        for v in &mut self.values {
            *v *= factor;
        }
        for c in &mut self.components {
            c.weight *= factor;
        }
        self
    }
}

/// Sample times `n * dt` for `n = 0, 1, ...` while `n * dt <= t_max`.
pub fn time_grid(dt: f64, t_max: f64) -> Vec<f64> {
    let count = math::floor(t_max / dt + 1e-9) as usize + 1;
    (0..count).map(|n| n as f64 * dt).collect()
}

/// Evaluates `chi(t)` from the full eigendecomposition:
///
/// ```text
/// chi(t) = sum_n <psi|A|n> <n|B|psi> exp(i (E0 - E_n) t)
/// ```
///
/// where `psi` is the ground state with energy `E0` and `n` runs over all
/// eigenstates. Components with weight below 1e-14 are dropped.
pub fn dynamic_correlation(
    spectrum: &Spectrum,
    a: &PauliOperatorSum,
    b: &PauliOperatorSum,
    gs: &GroundStateResult,
    dt: f64,
    t_max: f64,
) -> Result<CorrelationTrace> {
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::range("dt", alloc::format!("{dt} must be positive")));
    }
    if !(t_max >= dt && t_max.is_finite()) {
        return Err(Error::range(
            "T_max",
            alloc::format!("{t_max} must be at least dt = {dt}"),
        ));
    }
    let b_psi = apply_pauli_sum(b, &gs.state)?;
    let adag_psi = apply_pauli_sum(&a.adjoint(), &gs.state)?;
    let mut components = Vec::new();
    for block in &spectrum.blocks {
        for (k, &e) in block.energies.iter().enumerate() {
            let v = block.vector(k);
            let mut left = Complex64::new(0.0, 0.0);
            let mut right = Complex64::new(0.0, 0.0);
            for (&idx, &z) in block.basis.iter().zip(v) {
                left += z.conj() * adag_psi[idx];
                right += z.conj() * b_psi[idx];
            }
            let weight = left.conj() * right;
            if weight.norm() > 1e-14 {
                components.push(SpectralComponent {
                    frequency: gs.energy - e,
                    weight,
                });
            }
        }
    }
    let times = time_grid(dt, t_max);
    let values = times
        .iter()
        .map(|&t| {
            components
                .iter()
                .map(|c| {
                    let arg = c.frequency * t;
                    c.weight * Complex64::new(math::cos(arg), math::sin(arg))
                })
                .sum()
        })
        .collect();
    Ok(CorrelationTrace {
        dt,
        times,
        values,
        components,
    })
}
