use alloc::format;
use alloc::vec::Vec;

use rand::Rng;
use rand_distr::{Bernoulli, Beta, Distribution, LogNormal, Normal, Uniform};
use serde::{Deserialize, Serialize};

use crate::{seed, Error, Result};

/// A univariate distribution of the utility model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum DistributionSpec {
    Beta {
        a: f64,
        b: f64,
    },
    /// `exp(N(mu, sigma^2))`.
    LogNormal {
        mu: f64,
        sigma: f64,
    },
    Normal {
        mu: f64,
        sigma: f64,
    },
    Uniform {
        lo: f64,
        hi: f64,
    },
    /// Takes the value 1 with probability `p`, else 0.
    Bernoulli {
        p: f64,
    },
    PointMass {
        value: f64,
    },
}

/// A validated distribution ready to draw from.
#[derive(Debug, Clone, Copy)]
pub enum Sampler {
    Beta(Beta<f64>),
    LogNormal(LogNormal<f64>),
    Normal(Normal<f64>),
    Uniform(Uniform<f64>),
    Bernoulli(Bernoulli),
    PointMass(f64),
}

impl Sampler {
    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self {
            Sampler::Beta(d) => d.sample(rng),
            Sampler::LogNormal(d) => d.sample(rng),
            Sampler::Normal(d) => d.sample(rng),
            Sampler::Uniform(d) => d.sample(rng),
            Sampler::Bernoulli(d) => {
                if d.sample(rng) {
                    1.0
                } else {
                    0.0
                }
            }
            Sampler::PointMass(v) => *v,
        }
    }
}

impl DistributionSpec {
    pub fn sampler(&self) -> Result<Sampler> {
        let bad = |detail: &dyn core::fmt::Display| Error::spec(format!("{self:?}: {detail}"));
        let finite = |xs: &[f64]| xs.iter().all(|x| x.is_finite());
        match *self {
            DistributionSpec::Beta { a, b } => {
                if !(finite(&[a, b]) && a > 0.0 && b > 0.0) {
                    return Err(bad(&"shape parameters must be positive"));
                }
                Beta::new(a, b).map(Sampler::Beta).map_err(|e| bad(&e))
            }
            DistributionSpec::LogNormal { mu, sigma } => {
                if !(finite(&[mu, sigma]) && sigma >= 0.0) {
                    return Err(bad(&"sigma must be nonnegative"));
                }
                LogNormal::new(mu, sigma)
                    .map(Sampler::LogNormal)
                    .map_err(|e| bad(&e))
            }
            DistributionSpec::Normal { mu, sigma } => {
                if !(finite(&[mu, sigma]) && sigma >= 0.0) {
                    return Err(bad(&"sigma must be nonnegative"));
                }
                Normal::new(mu, sigma)
                    .map(Sampler::Normal)
                    .map_err(|e| bad(&e))
            }
            DistributionSpec::Uniform { lo, hi } => {
                if !(finite(&[lo, hi]) && lo < hi) {
                    return Err(bad(&"bounds must satisfy lo < hi"));
                }
                Uniform::new(lo, hi)
                    .map(Sampler::Uniform)
                    .map_err(|e| bad(&e))
            }
            DistributionSpec::Bernoulli { p } => Bernoulli::new(p)
                .map(Sampler::Bernoulli)
                .map_err(|e| bad(&e)),
            DistributionSpec::PointMass { value } => {
                if !value.is_finite() {
                    return Err(bad(&"value must be finite"));
                }
                Ok(Sampler::PointMass(value))
            }
        }
    }

    /// Analytic mean.
    pub fn mean(&self) -> f64 {
        match *self {
            DistributionSpec::Beta { a, b } => a / (a + b),
            DistributionSpec::LogNormal { mu, sigma } => crate::math::exp(mu + sigma * sigma / 2.0),
            DistributionSpec::Normal { mu, .. } => mu,
            DistributionSpec::Uniform { lo, hi } => (lo + hi) / 2.0,
            DistributionSpec::Bernoulli { p } => p,
            DistributionSpec::PointMass { value } => value,
        }
    }

    /// `n` draws from the stream keyed by `seed`.
    pub fn sample(&self, n: usize, seed: u64) -> Result<Vec<f64>> {
        let sampler = self.sampler()?;
        let mut rng = seed::rng(seed);
        Ok((0..n).map(|_| sampler.draw(&mut rng)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_mass_is_constant() {
        let s = DistributionSpec::PointMass { value: 2.5 }
            .sample(100, 3)
            .unwrap();
        assert!(s.iter().all(|&v| v == 2.5));
    }

    #[test]
    fn same_seed_same_draws() {
        let d = DistributionSpec::Beta { a: 2.0, b: 8.0 };
        assert_eq!(d.sample(64, 11).unwrap(), d.sample(64, 11).unwrap());
        assert_ne!(d.sample(64, 11).unwrap(), d.sample(64, 12).unwrap());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(DistributionSpec::Beta { a: 0.0, b: 1.0 }.sampler().is_err());
        assert!(DistributionSpec::Uniform { lo: 2.0, hi: 1.0 }
            .sampler()
            .is_err());
        assert!(DistributionSpec::Bernoulli { p: 1.5 }.sampler().is_err());
        assert!(DistributionSpec::LogNormal {
            mu: 0.0,
            sigma: -1.0
        }
        .sampler()
        .is_err());
    }

    #[test]
    fn serde_tagging() {
        let d: DistributionSpec =
            serde_json::from_str(r#"{"family":"log_normal","mu":3.5,"sigma":1.0}"#).unwrap();
        assert_eq!(
            d,
            DistributionSpec::LogNormal {
                mu: 3.5,
                sigma: 1.0
            }
        );
    }
}
