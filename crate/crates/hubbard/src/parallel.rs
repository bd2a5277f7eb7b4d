//! Rayon versions of the core sweeps. Each work item is a pure function of
//! its index and the master seed, so results do not depend on the thread
//! count.

use hubbard_core::logical::{LogicalCostInputs, LogicalCostReport};
use hubbard_core::model::HubbardSpec;
use hubbard_core::physical::{lattice_estimate, ArchitectureConfig, PhysicalEstimate};
use hubbard_core::signal::{draw_frequency_sets, sweep_row, SweepConfig, SweepTable};
use hubbard_core::utility::{aggregate_stage, EconomicConstants, Stage, UtilityDistribution};
use hubbard_core::Result;
use rayon::prelude::*;

/// Resolution sweep with one task per `T_max` row.
pub fn resolution_sweep(config: &SweepConfig) -> Result<SweepTable> {
    let sets = draw_frequency_sets(config)?;
    let rows = (0..config.t_max_grid.len())
        .into_par_iter()
        .map(|t| sweep_row(config, &sets, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable::from_rows(rows))
}

/// Logical and physical estimates of every lattice size, in input order.
pub fn lattice_sweep(
    sizes: &[(usize, usize)],
    make_spec: impl Fn(usize, usize) -> HubbardSpec + Sync,
    inputs: &LogicalCostInputs,
    config: &ArchitectureConfig,
) -> Result<Vec<(LogicalCostReport, PhysicalEstimate)>> {
    sizes
        .par_iter()
        .map(|&(nx, ny)| lattice_estimate(&make_spec(nx, ny), inputs, config))
        .collect()
}

/// Present-value distributions of every stage, in [`Stage::ALL`] order.
pub fn all_stages(
    c: &EconomicConstants,
    seed: u64,
    n: usize,
) -> Result<Vec<(Stage, UtilityDistribution)>> {
    Stage::ALL
        .par_iter()
        .map(|&s| aggregate_stage(s, c, seed, n).map(|d| (s, d)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_sweep_matches_sequential() {
        let config = SweepConfig {
            t_max_grid: vec![100.0, 300.0, 500.0],
            epsilon_grid: vec![0.05, 0.4],
            n_sets: 3,
            n_realizations: 5,
            ..SweepConfig::default()
        };
        assert_eq!(
            resolution_sweep(&config).unwrap(),
            hubbard_core::signal::resolution_sweep(&config).unwrap()
        );
    }

    #[test]
    fn parallel_stages_match_sequential() {
        let c = EconomicConstants::default();
        for (s, d) in all_stages(&c, 3, 1000).unwrap() {
            assert_eq!(d, aggregate_stage(s, &c, 3, 1000).unwrap());
        }
    }
}
