//! Monte Carlo model of the economic utility of a Hubbard-model solver.
//!
//! Annual savings are sampled in M$/yr from the first-order pools (HPC,
//! energy, carbon, personnel, experimental guidance), turned into present
//! value in $B, and optionally combined with the value of an earlier
//! room-temperature superconductor in transmission lines.
//!
//! Every random factor draws from its own stream of the master seed, so a
//! stage that adds a term shares all other draws with the stage below it.

mod constants;
mod distribution;
mod stages;
mod summary;

pub use constants::{AccelerationReading, EconomicConstants, ExistenceReading};
pub use distribution::{DistributionSpec, Sampler};
pub use stages::{
    aggregate_stage, guidance_savings, hpc_savings, personnel_savings, reduction_years,
    stage23_annual_savings, stage45_annual_savings, superconductor_npv_years,
    transmission_spillover, Stage,
};
pub use summary::{Histogram, UtilityDistribution, UtilitySummary};
