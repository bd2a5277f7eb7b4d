use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::math;

/// Empirical distribution of Monte Carlo samples, stored in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct UtilityDistribution {
    sorted: Vec<f64>,
    mean: f64,
}

/// Histogram estimate of the density with the matching empirical CDF at the
/// right edge of every bin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub density: Vec<f64>,
    pub cdf: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UtilitySummary {
    pub samples: usize,
    pub mean: f64,
    pub q10: f64,
    pub q50: f64,
    pub q90: f64,
    pub zero_mass: f64,
    pub min: f64,
    pub max: f64,
}

impl UtilityDistribution {
    pub fn new(mut samples: Vec<f64>) -> Self {
        samples.sort_by(f64::total_cmp);
        let mean = if samples.is_empty() {
            f64::NAN
        } else {
            math::compensated_sum(samples.iter().copied()) / samples.len() as f64
        };
        UtilityDistribution {
            sorted: samples,
            mean,
        }
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn sorted(&self) -> &[f64] {
        &self.sorted
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// Linear interpolation between order statistics at rank `q (n - 1)`.
    pub fn quantile(&self, q: f64) -> f64 {
        let n = self.sorted.len();
        if n == 0 {
            return f64::NAN;
        }
        let pos = q.clamp(0.0, 1.0) * (n - 1) as f64;
        let lo = math::floor(pos) as usize;
        let hi = (lo + 1).min(n - 1);
        let frac = pos - lo as f64;
        self.sorted[lo] + frac * (self.sorted[hi] - self.sorted[lo])
    }

    /// Fraction of samples exactly equal to zero.
    pub fn zero_mass(&self) -> f64 {
        let zeros = self.sorted.iter().filter(|&&v| v == 0.0).count();
        zeros as f64 / self.sorted.len().max(1) as f64
    }

    /// Fraction of samples at or below `x`.
    pub fn cdf(&self, x: f64) -> f64 {
        let below = self.sorted.partition_point(|&v| v <= x);
        below as f64 / self.sorted.len().max(1) as f64
    }

    /// `bins` equal-width bins spanning the sample range.
    pub fn histogram(&self, bins: usize) -> Histogram {
        let bins = bins.max(1);
        let n = self.sorted.len();
        if n == 0 {
            return Histogram {
                edges: Vec::new(),
                density: Vec::new(),
                cdf: Vec::new(),
            };
        }
        let lo = self.sorted[0];
        let mut hi = self.sorted[n - 1];
        if hi <= lo {
            hi = lo + 1.0;
        }
        let width = (hi - lo) / bins as f64;
        let edges: Vec<f64> = (0..=bins).map(|i| lo + width * i as f64).collect();
        let mut counts = vec![0usize; bins];
        for &v in &self.sorted {
            let b = (((v - lo) / width) as usize).min(bins - 1);
            counts[b] += 1;
        }
        let mut cumulative = 0;
        let mut cdf = Vec::with_capacity(bins);
        let mut density = Vec::with_capacity(bins);
        for &c in &counts {
            cumulative += c;
            density.push(c as f64 / (n as f64 * width));
            cdf.push(cumulative as f64 / n as f64);
        }
        Histogram {
            edges,
            density,
            cdf,
        }
    }

    pub fn summary(&self) -> UtilitySummary {
        UtilitySummary {
            samples: self.len(),
            mean: self.mean,
            q10: self.quantile(0.1),
            q50: self.quantile(0.5),
            q90: self.quantile(0.9),
            zero_mass: self.zero_mass(),
            min: self.sorted.first().copied().unwrap_or(f64::NAN),
            max: self.sorted.last().copied().unwrap_or(f64::NAN),
        }
    }
}
