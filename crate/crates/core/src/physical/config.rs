use alloc::format;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Magic-state distillation factory: every round of `cycles_per_round` code
/// cycles, `rounds` levels deep, emits `t_states_per_round` T states.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FactoryRecipe {
    pub t_states_per_round: u64,
    pub rounds: u64,
    pub cycles_per_round: u64,
    pub footprint_qubits: u64,
    pub output_error: f64,
}

impl Default for FactoryRecipe {
    /// Two levels of 15-to-1 distillation. The output error is two rounds of
    /// `35 p^3` starting from `p = 1e-3`.
    fn default() -> Self {
        FactoryRecipe {
            t_states_per_round: 1,
            rounds: 2,
            cycles_per_round: 30,
            footprint_qubits: 16_000,
            output_error: 1.5e-21,
        }
    }
}

/// Physical layer of a multi-fridge, measurement-based surface-code machine.
///
/// Logical error per operation at distance `d` is
/// `prefactor (p / p_th)^((d + 1) / 2)`. Each logical qubit occupies
/// `routing_factor` patches of `2 d^2` physical qubits. The computation is
/// streamed as widgets of `t_per_widget` T gates, each T gate taking
/// `layers_per_t` logical layers of `d` code cycles plus `injection_cycles`
/// to inject its magic state. Widgets hand over between fridges through
/// `d` Bell pairs per logical qubit, generated at `bell_pair_rate` and kept
/// with probability `bell_fidelity`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ArchitectureConfig {
    pub physical_error_rate: f64,
    pub threshold: f64,
    pub prefactor: f64,
    /// Seconds per surface-code cycle.
    pub cycle_time: f64,
    pub qubits_per_fridge: u64,
    pub fridges: u64,
    pub min_distance: u64,
    pub max_distance: u64,
    pub routing_factor: f64,
    pub factory: FactoryRecipe,
    pub t_per_widget: u64,
    pub layers_per_t: f64,
    pub injection_cycles: f64,
    /// Raw Bell pairs per second between two fridges.
    pub bell_pair_rate: f64,
    pub bell_fidelity: f64,
}

impl Default for ArchitectureConfig {
    fn default() -> Self {
        ArchitectureConfig {
            physical_error_rate: 1e-3,
            threshold: 1e-2,
            prefactor: 0.1,
            cycle_time: 1e-6,
            qubits_per_fridge: 1_000_000,
            fridges: 2,
            min_distance: 3,
            max_distance: 201,
            routing_factor: 2.0,
            factory: FactoryRecipe::default(),
            t_per_widget: 1000,
            layers_per_t: 1.0,
            injection_cycles: 1.0,
            bell_pair_rate: 1e6,
            bell_fidelity: 0.99,
        }
    }
}

impl ArchitectureConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("physical_error_rate", self.physical_error_rate),
            ("threshold", self.threshold),
            ("prefactor", self.prefactor),
            ("cycle_time", self.cycle_time),
            ("routing_factor", self.routing_factor),
            ("layers_per_t", self.layers_per_t),
            ("bell_pair_rate", self.bell_pair_rate),
            ("bell_fidelity", self.bell_fidelity),
        ];
        for (what, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::spec(format!("{what} = {v} must be positive")));
            }
        }
        if !(self.injection_cycles >= 0.0 && self.injection_cycles.is_finite()) {
            return Err(Error::spec("injection_cycles must be nonnegative"));
        }
        if self.physical_error_rate >= self.threshold {
            return Err(Error::spec(format!(
                "physical error rate {} is not below threshold {}",
                self.physical_error_rate, self.threshold
            )));
        }
        if self.bell_fidelity > 1.0 {
            return Err(Error::spec("bell_fidelity exceeds 1"));
        }
        if self.fridges == 0 || self.qubits_per_fridge == 0 {
            return Err(Error::spec(
                "fridges and qubits_per_fridge must be positive",
            ));
        }
        if self.min_distance < 3
            || self.min_distance % 2 == 0
            || self.max_distance < self.min_distance
        {
            return Err(Error::spec(
                "distance bounds must be odd, at least 3 and ordered",
            ));
        }
        if self.t_per_widget == 0 {
            return Err(Error::spec("t_per_widget must be positive"));
        }
        let f = &self.factory;
        if f.t_states_per_round == 0 || f.rounds == 0 || f.cycles_per_round == 0 {
            return Err(Error::spec("factory rates must be positive"));
        }
        Ok(())
    }

    pub fn capacity(&self) -> u64 {
        self.qubits_per_fridge.saturating_mul(self.fridges)
    }

    /// T states per second from one factory.
    pub fn factory_rate(&self) -> f64 {
        let f = &self.factory;
        f.t_states_per_round as f64 / ((f.rounds * f.cycles_per_round) as f64 * self.cycle_time)
    }

    /// Seconds of intramodule work per T gate at distance `d`.
    pub fn seconds_per_t(&self, distance: u64) -> f64 {
        self.layers_per_t * distance as f64 * self.cycle_time
    }
}
