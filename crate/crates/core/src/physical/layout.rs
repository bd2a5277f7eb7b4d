use alloc::format;

use serde::{Deserialize, Serialize};

use super::config::ArchitectureConfig;
use crate::{math, Error, Result};

/// Smallest odd `d >= min_distance` with
/// `prefactor (p / p_th)^((d + 1) / 2) <= budget`.
pub fn code_distance(budget: f64, config: &ArchitectureConfig) -> Result<u64> {
    if !(budget > 0.0 && budget < 1.0) {
        return Err(Error::range(
            "error budget",
            format!("{budget} not in (0, 1)"),
        ));
    }
    let ratio = config.physical_error_rate / config.threshold;
    if ratio.is_nan() || ratio >= 1.0 {
        return Err(Error::spec(format!(
            "physical error rate {} is not below threshold {}",
            config.physical_error_rate, config.threshold
        )));
    }
    let mut d = config.min_distance.max(3) | 1;
    while d <= config.max_distance {
        let logical = config.prefactor * math::powf(ratio, d.div_ceil(2) as f64);
        if logical <= budget * (1.0 + 1e-12) {
            return Ok(d);
        }
        d += 2;
    }
    Err(Error::range(
        "error budget",
        format!("{budget} needs a distance above {}", config.max_distance),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalLayout {
    pub distance: u64,
    pub logical_qubits: u64,
    /// Every physical qubit not used for distillation: data patches plus
    /// routing.
    pub bus_qubits: u64,
    pub factory_count: u64,
    pub factory_qubits: u64,
    pub capacity: u64,
    /// Capacity left unallocated.
    pub idle_qubits: u64,
    /// T states per second the factories supply.
    pub t_supply_rate: f64,
}

/// Physical qubits of `logical_qubits` patches plus routing at distance `d`.
pub fn bus_qubits(logical_qubits: u64, distance: u64, config: &ArchitectureConfig) -> u64 {
    let per_logical = config.routing_factor * 2.0 * (distance * distance) as f64;
    math::ceil_count(logical_qubits as f64 * per_logical)
}

/// Allocates bus and factory qubits. Factories are added until their output
/// meets `t_demand` T states per second. Layouts that overflow the machine
/// are reported with their shortfall.
pub fn provision_layout(
    logical_qubits: u64,
    t_demand: f64,
    distance: u64,
    config: &ArchitectureConfig,
) -> Result<PhysicalLayout> {
    config.validate()?;
    if !(t_demand >= 0.0 && t_demand.is_finite()) {
        return Err(Error::range(
            "T demand",
            format!("{t_demand} is not finite and nonnegative"),
        ));
    }
    if distance % 2 == 0 || distance < 3 {
        return Err(Error::contract(format!(
            "code distance {distance} is not odd and at least 3"
        )));
    }
    let rate = config.factory_rate();
    let factory_count = math::ceil_count(t_demand / rate);
    let factory_qubits = factory_count.saturating_mul(config.factory.footprint_qubits);
    let bus = bus_qubits(logical_qubits, distance, config);
    let required = bus.saturating_add(factory_qubits);
    let capacity = config.capacity();
    if required > capacity {
        return Err(Error::Infeasible {
            required,
            capacity,
            shortfall: required - capacity,
        });
    }
    Ok(PhysicalLayout {
        distance,
        logical_qubits,
        bus_qubits: bus,
        factory_count,
        factory_qubits,
        capacity,
        idle_qubits: capacity - required,
        t_supply_rate: factory_count as f64 * rate,
    })
}
