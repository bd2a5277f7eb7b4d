use alloc::format;

use serde::{Deserialize, Serialize};

use super::distribution::DistributionSpec;
use crate::{Error, Result};

/// How the existence probability enters the superconductor NPV.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExistenceReading {
    /// Every sample is weighted by `sc_exist_p`.
    #[default]
    Scalar,
    /// Each sample draws existence with probability `sc_exist_p`; absent
    /// superconductors contribute zero.
    Bernoulli,
}

/// How the acceleration factor `f` shortens the time to discovery after
/// the solver arrives at year `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AccelerationReading {
    /// `z = s + (y - s) f`: the remaining time is multiplied by `f`.
    #[default]
    Multiplicative,
    /// `z = y - (y - s) f`: a fraction `f` of the remaining time is removed.
    Subtractive,
}

/// Inputs of the utility model. Money is in M$ and M$/yr.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EconomicConstants {
    /// Annual HPC spend on Hubbard-type computations.
    pub hpc_pool: f64,
    pub hpc_fraction: DistributionSpec,
    pub energy_hpc: f64,
    pub carbon_hpc: f64,
    /// Annual experimental spend that better guidance could redirect.
    pub experiment_pool: f64,
    pub experiment_fraction: DistributionSpec,
    pub knowledge_fixed: f64,
    pub personnel: f64,
    pub personnel_gain: DistributionSpec,
    pub discount: f64,
    pub science_multiplier: f64,
    /// Years until the solver is available.
    pub solver_year_offset: f64,
    pub sc_exist_p: f64,
    pub sc_year: DistributionSpec,
    pub acceleration: DistributionSpec,
    /// Annual transmission losses a superconductor would recover.
    pub transmission: DistributionSpec,
    pub existence: ExistenceReading,
    pub acceleration_reading: AccelerationReading,
}

impl Default for EconomicConstants {
    fn default() -> Self {
        EconomicConstants {
            hpc_pool: 589.0,
            hpc_fraction: DistributionSpec::Beta { a: 2.0, b: 8.0 },
            energy_hpc: 2.05,
            carbon_hpc: 1.56,
            experiment_pool: 525.0 + 292.0,
            experiment_fraction: DistributionSpec::Beta { a: 1.0, b: 99.0 },
            knowledge_fixed: 1.3,
            personnel: 20.5,
            personnel_gain: DistributionSpec::Beta { a: 1.0, b: 4.0 },
            discount: 0.05,
            science_multiplier: 5.0,
            solver_year_offset: 10.0,
            sc_exist_p: 0.8,
            sc_year: DistributionSpec::LogNormal {
                mu: 3.5,
                sigma: 1.0,
            },
            acceleration: DistributionSpec::Beta { a: 2.0, b: 4.0 },
            transmission: DistributionSpec::Uniform {
                lo: 4000.0,
                hi: 8000.0,
            },
            existence: ExistenceReading::Scalar,
            acceleration_reading: AccelerationReading::Multiplicative,
        }
    }
}

impl EconomicConstants {
    pub fn validate(&self) -> Result<()> {
        let nonnegative = [
            ("hpc_pool", self.hpc_pool),
            ("energy_hpc", self.energy_hpc),
            ("carbon_hpc", self.carbon_hpc),
            ("experiment_pool", self.experiment_pool),
            ("knowledge_fixed", self.knowledge_fixed),
            ("personnel", self.personnel),
            ("science_multiplier", self.science_multiplier),
            ("solver_year_offset", self.solver_year_offset),
        ];
        for (what, v) in nonnegative {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(Error::spec(format!("{what} = {v} must be nonnegative")));
            }
        }
        if !(self.discount > 0.0 && self.discount <= 1.0) {
            return Err(Error::spec(format!(
                "discount {} not in (0, 1]",
                self.discount
            )));
        }
        if !(0.0..=1.0).contains(&self.sc_exist_p) {
            return Err(Error::spec(format!(
                "sc_exist_p {} not in [0, 1]",
                self.sc_exist_p
            )));
        }
        for d in [
            &self.hpc_fraction,
            &self.experiment_fraction,
            &self.personnel_gain,
            &self.sc_year,
            &self.acceleration,
            &self.transmission,
        ] {
            d.sampler()?;
        }
        Ok(())
    }

    /// `knowledge_fixed + personnel`, the spend scaled by the productivity
    /// gain.
    pub fn personnel_base(&self) -> f64 {
        self.knowledge_fixed + self.personnel
    }

    /// M$/yr of annual savings to $B of present value: a perpetuity
    /// `1 / r`, the science multiplier, and discounting to the solver year
    /// by `(1 - r)^offset`.
    pub fn present_value_factor(&self) -> f64 {
        let r = self.discount;
        self.science_multiplier / r * crate::math::powf(1.0 - r, self.solver_year_offset) / 1000.0
    }
}
