use alloc::vec::Vec;

use num_complex::Complex64;
use rand::seq::index;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::dft::{Dft, Spectrum};
use super::peaks::PeakPolicy;
use super::score::{score_recovery, ScoreOptions};
use super::synth::{sign_pattern, synthesize, SignalSpec};
use crate::{math, seed, Error, Result};

const STREAM_SETS: u64 = 0x5e75;
const STREAM_NOISE: u64 = 0x0015e;

/// `start, start + step, ...` up to and including `stop` (within rounding).
pub fn arange(start: f64, stop: f64, step: f64) -> Vec<f64> {
    let count = math::floor((stop - start) / step + 1e-9) as usize + 1;
    (0..count)
        .map(|k| {
            let v = start + k as f64 * step;
            math::round(v * 1e12) / 1e12
        })
        .collect()
}

/// What a noisy spectrum's peaks are scored against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScoreReference {
    /// The frequencies and amplitudes the signal was synthesized from.
    Given,
    /// The peaks found, under the same policy, in the noise-free spectrum
    /// of the same record.
    CleanPeaks,
}

/// Parameters of a resolution sweep over `(T_max, epsilon)` cells.
///
/// Every cell averages the recovery score over `n_sets` random frequency
/// sets times `n_realizations` noise realizations. The frequency sets are
/// shared by all cells; the noise sign patterns are drawn per `T_max` row
/// and shared across that row's epsilon values, so neighbouring cells are
/// compared on common random numbers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    pub t_max_grid: Vec<f64>,
    pub epsilon_grid: Vec<f64>,
    pub dt: f64,
    pub frequency_grid: Vec<f64>,
    pub amplitude_grid: Vec<f64>,
    pub n_frequencies: usize,
    pub n_sets: usize,
    pub n_realizations: usize,
    pub seed: u64,
    pub policy: PeakPolicy,
    pub score: ScoreOptions,
    pub reference: ScoreReference,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            t_max_grid: arange(70.0, 1000.0, 25.0),
            epsilon_grid: arange(0.01, 0.6, 0.02),
            dt: 1.5,
            frequency_grid: arange(-2.0, 2.0, 0.1),
            amplitude_grid: arange(0.4, 1.0, 0.05),
            n_frequencies: 6,
            n_sets: 30,
            n_realizations: 100,
            seed: 0,
            policy: PeakPolicy::default(),
            score: ScoreOptions::default(),
            reference: ScoreReference::Given,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.t_max_grid.is_empty() || self.epsilon_grid.is_empty() {
            return Err(Error::spec("sweep grids must be non-empty"));
        }
        if self.n_sets == 0 || self.n_realizations == 0 {
            return Err(Error::spec("ensemble sizes must be positive"));
        }
        if self.n_frequencies == 0 || self.n_frequencies > self.frequency_grid.len() {
            return Err(Error::spec(
                "n_frequencies must be between 1 and the frequency grid size",
            ));
        }
        if self.amplitude_grid.is_empty() {
            return Err(Error::spec("amplitude grid must be non-empty"));
        }
        if self
            .epsilon_grid
            .iter()
            .any(|&e| !(e >= 0.0 && e.is_finite()))
        {
            return Err(Error::spec("epsilon values must be non-negative"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrequencySet {
    pub frequencies: Vec<f64>,
    pub amplitudes: Vec<f64>,
}

/// Draws `n_sets` sets of distinct frequencies, each with amplitudes drawn
/// with replacement, sorted by frequency.
pub fn draw_frequency_sets(config: &SweepConfig) -> Result<Vec<FrequencySet>> {
    config.validate()?;
    Ok((0..config.n_sets)
        .map(|s| {
            let mut rng = seed::stream_rng(config.seed, STREAM_SETS, s as u64);
            let mut picks: Vec<usize> =
                index::sample(&mut rng, config.frequency_grid.len(), config.n_frequencies)
                    .into_vec();
            picks.sort_unstable();
            let frequencies = picks.iter().map(|&k| config.frequency_grid[k]).collect();
            let amplitudes = picks
                .iter()
                .map(|_| config.amplitude_grid[rng.random_range(0..config.amplitude_grid.len())])
                .collect();
            FrequencySet {
                frequencies,
                amplitudes,
            }
        })
        .collect())
}

/// Ensemble-averaged score of one `(T_max, epsilon)` cell.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepCell {
    pub t_max: f64,
    pub epsilon: f64,
    pub freq_error: f64,
    /// Standard error of `freq_error` over the ensemble.
    pub freq_error_sem: f64,
    pub joint_error: f64,
    pub missed: f64,
    pub spurious: f64,
    pub samples: usize,
}

#[derive(Default)]
struct Acc {
    n: usize,
    f: f64,
    f2: f64,
    j: f64,
    missed: f64,
    spurious: f64,
}

/// Evaluates every epsilon cell of row `t_index`.
pub fn sweep_row(
    config: &SweepConfig,
    sets: &[FrequencySet],
    t_index: usize,
) -> Result<Vec<SweepCell>> {
    config.validate()?;
    let t_max = *config
        .t_max_grid
        .get(t_index)
        .ok_or_else(|| Error::range("T_max index", alloc::format!("{t_index}")))?;
    let specs: Vec<SignalSpec> = sets
        .iter()
        .map(|s| {
            SignalSpec::new(
                s.frequencies.clone(),
                s.amplitudes.clone(),
                config.dt,
                t_max,
            )
        })
        .collect();
    let n = SignalSpec::unit(Vec::new(), config.dt, t_max).n_samples();
    let dft = Dft::new(n);
    let clean: Vec<Vec<Complex64>> = specs
        .iter()
        .map(|s| synthesize(s).map(|x| dft.forward(&x)))
        .collect::<Result<_>>()?;
    let noise: Vec<Vec<Complex64>> = (0..config.n_realizations)
        .map(|r| {
            let idx = ((t_index as u64) << 32) | r as u64;
            dft.forward(&sign_pattern(
                n,
                seed::derive_seed(config.seed, STREAM_NOISE, idx),
            ))
        })
        .collect();
    let template = Spectrum::from_coefficients(alloc::vec![Complex64::new(0.0, 0.0); n], config.dt);
    let bin = template.bin_width();
    let inv_n = 1.0 / n as f64;
    let mut amp = alloc::vec![0.0; n];
    let references: Vec<SignalSpec> = match config.reference {
        ScoreReference::Given => specs.clone(),
        ScoreReference::CleanPeaks => clean
            .iter()
            .map(|c| {
                for (a, ci) in amp.iter_mut().zip(c) {
                    *a = math::sqrt(ci.norm_sqr()) * inv_n;
                }
                let p = config.policy.find_in(&amp, &template.frequencies, bin);
                SignalSpec::new(
                    p.frequencies(),
                    p.peaks.iter().map(|q| q.amplitude).collect(),
                    config.dt,
                    t_max,
                )
            })
            .collect(),
    };

    let mut out = Vec::with_capacity(config.epsilon_grid.len());
    for &eps in &config.epsilon_grid {
        let mut acc = Acc::default();
        for (spec, c) in references.iter().zip(&clean) {
            for s in &noise {
                for ((a, ci), si) in amp.iter_mut().zip(c).zip(s) {
                    *a = math::sqrt((ci + si * eps).norm_sqr()) * inv_n;
                }
                let peaks = config.policy.find_in(&amp, &template.frequencies, bin);
                let score = score_recovery(spec, &peaks, &config.score);
                acc.n += 1;
                acc.f += score.freq_error;
                acc.f2 += score.freq_error * score.freq_error;
                acc.j += score.joint_error;
                acc.missed += score.missed as f64;
                acc.spurious += score.spurious as f64;
            }
        }
        let k = acc.n as f64;
        let mean = acc.f / k;
        let var = if acc.n > 1 {
            ((acc.f2 - k * mean * mean) / (k - 1.0)).max(0.0)
        } else {
            0.0
        };
        out.push(SweepCell {
            t_max,
            epsilon: eps,
            freq_error: mean,
            freq_error_sem: math::sqrt(var / k),
            joint_error: acc.j / k,
            missed: acc.missed / k,
            spurious: acc.spurious / k,
            samples: acc.n,
        });
    }
    Ok(out)
}

/// Cells in row-major order: `T_max` outer, epsilon inner.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub n_t_max: usize,
    pub n_epsilon: usize,
    pub cells: Vec<SweepCell>,
}

impl SweepTable {
    pub fn from_rows(rows: Vec<Vec<SweepCell>>) -> Self {
        let n_t_max = rows.len();
        let n_epsilon = rows.first().map_or(0, Vec::len);
        SweepTable {
            n_t_max,
            n_epsilon,
            cells: rows.into_iter().flatten().collect(),
        }
    }

    pub fn cell(&self, t_index: usize, e_index: usize) -> &SweepCell {
        &self.cells[t_index * self.n_epsilon + e_index]
    }
}

/// Runs the whole sweep sequentially.
pub fn resolution_sweep(config: &SweepConfig) -> Result<SweepTable> {
    let sets = draw_frequency_sets(config)?;
    let rows = (0..config.t_max_grid.len())
        .map(|t| sweep_row(config, &sets, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable::from_rows(rows))
}

/// Adjacent-pair trend violations of the ensemble-mean frequency error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Monotonicity {
    /// Pairs `(T_i, T_{i+1})` at fixed epsilon.
    pub t_pairs: usize,
    /// Pairs where the error grows with `T_max`.
    pub t_violations: usize,
    pub epsilon_pairs: usize,
    /// Pairs where the error shrinks as epsilon grows.
    pub epsilon_violations: usize,
}

impl Monotonicity {
    pub fn pairs(&self) -> usize {
        self.t_pairs + self.epsilon_pairs
    }

    pub fn violations(&self) -> usize {
        self.t_violations + self.epsilon_violations
    }

    pub fn violation_fraction(&self) -> f64 {
        if self.pairs() == 0 {
            0.0
        } else {
            self.violations() as f64 / self.pairs() as f64
        }
    }
}

/// Counts trend violations. A pair only counts when the difference exceeds
/// `sigmas` combined standard errors; `sigmas = 0` counts every reversal.
pub fn monotonicity(table: &SweepTable, sigmas: f64) -> Monotonicity {
    let mut m = Monotonicity {
        t_pairs: 0,
        t_violations: 0,
        epsilon_pairs: 0,
        epsilon_violations: 0,
    };
    let slack = |a: &SweepCell, b: &SweepCell| {
        sigmas
            * math::sqrt(a.freq_error_sem * a.freq_error_sem + b.freq_error_sem * b.freq_error_sem)
    };
    for e in 0..table.n_epsilon {
        for t in 0..table.n_t_max.saturating_sub(1) {
            let (a, b) = (table.cell(t, e), table.cell(t + 1, e));
            m.t_pairs += 1;
            if b.freq_error > a.freq_error + slack(a, b) {
                m.t_violations += 1;
            }
        }
    }
    for t in 0..table.n_t_max {
        for e in 0..table.n_epsilon.saturating_sub(1) {
            let (a, b) = (table.cell(t, e), table.cell(t, e + 1));
            m.epsilon_pairs += 1;
            if b.freq_error < a.freq_error - slack(a, b) {
                m.epsilon_violations += 1;
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grids() {
        let c = SweepConfig::default();
        assert_eq!(c.t_max_grid.len(), 38);
        assert_eq!(c.t_max_grid[37], 995.0);
        assert_eq!(c.epsilon_grid.len(), 30);
        assert_eq!(c.epsilon_grid[29], 0.59);
        assert_eq!(c.frequency_grid.len(), 41);
        assert_eq!(c.amplitude_grid.len(), 13);
    }

    #[test]
    fn sets_are_distinct_and_sorted() {
        let c = SweepConfig::default();
        for s in draw_frequency_sets(&c).unwrap() {
            assert!(s.frequencies.windows(2).all(|w| w[0] < w[1]));
            assert!(s.amplitudes.iter().all(|a| (0.4..=1.0).contains(a)));
        }
    }

    #[test]
    fn small_sweep_is_reproducible() {
        let c = SweepConfig {
            t_max_grid: alloc::vec![100.0, 400.0],
            epsilon_grid: alloc::vec![0.0, 0.3],
            n_sets: 3,
            n_realizations: 4,
            seed: 9,
            ..SweepConfig::default()
        };
        let a = resolution_sweep(&c).unwrap();
        assert_eq!(a, resolution_sweep(&c).unwrap());
        assert_eq!(a.cells.len(), 4);
        assert_eq!(a.cell(1, 0).samples, 12);
    }
}
