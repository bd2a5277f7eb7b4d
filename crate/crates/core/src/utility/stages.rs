use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::constants::{AccelerationReading, EconomicConstants, ExistenceReading};
use super::distribution::DistributionSpec;
use super::summary::UtilityDistribution;
use crate::{math, seed, Result};

const STREAM_HPC: u64 = 0x0001;
const STREAM_PERSONNEL: u64 = 0x0002;
const STREAM_EXPERIMENT: u64 = 0x0003;
const STREAM_EXIST: u64 = 0x0004;
const STREAM_YEAR: u64 = 0x0005;
const STREAM_ACCEL: u64 = 0x0006;
const STREAM_TRANSMISSION: u64 = 0x0007;

/// Utility threshold whose value is aggregated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    /// Replacing existing computational studies.
    S23,
    /// Guiding experiments, without superconductor spillover.
    S45NoSc,
    /// Guiding experiments, with transmission-line spillover.
    S45WithSc,
}

impl Stage {
    pub const ALL: [Stage; 3] = [Stage::S23, Stage::S45NoSc, Stage::S45WithSc];

    pub fn name(self) -> &'static str {
        match self {
            Stage::S23 => "s23",
            Stage::S45NoSc => "s45_no_sc",
            Stage::S45WithSc => "s45_with_sc",
        }
    }
}

fn draws(dist: &DistributionSpec, n: usize, master: u64, stream: u64) -> Result<Vec<f64>> {
    dist.sample(n, seed::derive_seed(master, stream, 0))
}

/// HPC savings term `fraction * hpc_pool`, M$/yr.
pub fn hpc_savings(c: &EconomicConstants, seed: u64, n: usize) -> Result<Vec<f64>> {
    let f = draws(&c.hpc_fraction, n, seed, STREAM_HPC)?;
    Ok(f.into_iter().map(|x| x * c.hpc_pool).collect())
}

/// Personnel productivity term `gain * (knowledge_fixed + personnel)`, M$/yr.
pub fn personnel_savings(c: &EconomicConstants, seed: u64, n: usize) -> Result<Vec<f64>> {
    let g = draws(&c.personnel_gain, n, seed, STREAM_PERSONNEL)?;
    let base = c.personnel_base();
    Ok(g.into_iter().map(|x| x * base).collect())
}

/// Experimental guidance term `fraction * experiment_pool`, M$/yr.
pub fn guidance_savings(c: &EconomicConstants, seed: u64, n: usize) -> Result<Vec<f64>> {
    let f = draws(&c.experiment_fraction, n, seed, STREAM_EXPERIMENT)?;
    Ok(f.into_iter().map(|x| x * c.experiment_pool).collect())
}

/// Annual savings of replacing existing computational studies, M$/yr:
/// HPC, energy, carbon and personnel terms.
pub fn stage23_annual_savings(c: &EconomicConstants, seed: u64, n: usize) -> Result<Vec<f64>> {
    c.validate()?;
    let hpc = hpc_savings(c, seed, n)?;
    let personnel = personnel_savings(c, seed, n)?;
    let fixed = c.energy_hpc + c.carbon_hpc;
    Ok(hpc
        .iter()
        .zip(&personnel)
        .map(|(h, p)| h + fixed + p)
        .collect())
}

/// Stage 2/3 savings plus experimental guidance, M$/yr. Shares its draws
/// with [`stage23_annual_savings`] under the same seed.
pub fn stage45_annual_savings(c: &EconomicConstants, seed: u64, n: usize) -> Result<Vec<f64>> {
    let mut base = stage23_annual_savings(c, seed, n)?;
    let guidance = guidance_savings(c, seed, n)?;
    for (b, g) in base.iter_mut().zip(guidance) {
        *b += g;
    }
    Ok(base)
}

fn discovery_years(c: &EconomicConstants, seed: u64, n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let y = draws(&c.sc_year, n, seed, STREAM_YEAR)?;
    let f = draws(&c.acceleration, n, seed, STREAM_ACCEL)?;
    let s = c.solver_year_offset;
    let z = y
        .iter()
        .zip(&f)
        .map(|(&y, &f)| {
            if y <= s {
                y
            } else {
                match c.acceleration_reading {
                    AccelerationReading::Multiplicative => s + (y - s) * f,
                    AccelerationReading::Subtractive => y - (y - s) * f,
                }
            }
        })
        .collect();
    Ok((y, z))
}

/// Years by which the solver brings the discovery forward, given that the
/// superconductor exists. Zero when it would be found before the solver.
pub fn reduction_years(c: &EconomicConstants, seed: u64, n: usize) -> Result<Vec<f64>> {
    c.validate()?;
    let (y, z) = discovery_years(c, seed, n)?;
    Ok(y.iter().zip(&z).map(|(y, z)| (y - z).max(0.0)).collect())
}

/// Present value of an earlier superconductor discovery, in years of
/// present-day annual savings: `w ((1 - r)^z - (1 - r)^y) / r` where `y` is
/// the discovery year without the solver, `z` the year with it, and `w` the
/// existence weight.
pub fn superconductor_npv_years(c: &EconomicConstants, seed: u64, n: usize) -> Result<Vec<f64>> {
    c.validate()?;
    let (y, z) = discovery_years(c, seed, n)?;
    let exist = match c.existence {
        ExistenceReading::Scalar => None,
        ExistenceReading::Bernoulli => Some(draws(
            &DistributionSpec::Bernoulli { p: c.sc_exist_p },
            n,
            seed,
            STREAM_EXIST,
        )?),
    };
    let r = c.discount;
    let keep = 1.0 - r;
    Ok((0..n)
        .map(|i| {
            let w = match &exist {
                None => c.sc_exist_p,
                Some(e) => e[i],
            };
            if w == 0.0 || y[i] <= c.solver_year_offset {
                return 0.0;
            }
            w * (math::powf(keep, z[i]) - math::powf(keep, y[i])) / r
        })
        .collect())
}

/// Present value of transmission losses recovered by an earlier
/// superconductor, $B.
pub fn transmission_spillover(
    c: &EconomicConstants,
    seed: u64,
    n: usize,
) -> Result<UtilityDistribution> {
    Ok(UtilityDistribution::new(transmission_values(c, seed, n)?))
}

fn transmission_values(c: &EconomicConstants, seed: u64, n: usize) -> Result<Vec<f64>> {
    let years = superconductor_npv_years(c, seed, n)?;
    let losses = draws(&c.transmission, n, seed, STREAM_TRANSMISSION)?;
    Ok(years
        .iter()
        .zip(&losses)
        .map(|(y, l)| y * l / 1000.0)
        .collect())
}

/// Present value of a stage, $B.
pub fn aggregate_stage(
    stage: Stage,
    c: &EconomicConstants,
    seed: u64,
    n: usize,
) -> Result<UtilityDistribution> {
    let annual = match stage {
        Stage::S23 => stage23_annual_savings(c, seed, n)?,
        Stage::S45NoSc | Stage::S45WithSc => stage45_annual_savings(c, seed, n)?,
    };
    let pv = c.present_value_factor();
    let mut values: Vec<f64> = annual.into_iter().map(|a| a * pv).collect();
    if stage == Stage::S45WithSc {
        for (v, t) in values.iter_mut().zip(transmission_values(c, seed, n)?) {
            *v += t;
        }
    }
    Ok(UtilityDistribution::new(values))
}
