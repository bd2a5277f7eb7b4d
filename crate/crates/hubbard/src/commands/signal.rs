use anyhow::Result;
use hubbard_core::seed::derive_seed;
use hubbard_core::signal::{
    inject_noise, monotonicity, synthesize, Dft, Monotonicity, PeakPolicy, SignalSpec, SweepConfig,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::artifacts::OutputDir;
use crate::cli::{Context, SignalArgs};
use crate::parallel;

/// Six frequencies with the close pair at -1.5 and -1.4.
pub const SCENARIO_FREQUENCIES: [f64; 6] = [-1.5, -1.4, -0.05, 0.5, 1.5, 1.8];
pub const SCENARIO_DT: f64 = 1.5;
/// `(T_max, epsilon)` of the clean long record, the low-noise long record and
/// the noisy short record.
pub const SCENARIOS: [(f64, f64); 3] = [(700.0, 0.0), (700.0, 0.01), (100.0, 0.5)];
/// Absolute frequency tolerance of a recovered line.
pub const RECOVERY_TOLERANCE: f64 = 0.01;

const STREAM_SCENARIO: u64 = 0xf162;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioSummary {
    pub t_max: f64,
    pub epsilon: f64,
    pub realizations: usize,
    pub bin_width: f64,
    /// Realizations in which every given frequency has a peak within
    /// [`RECOVERY_TOLERANCE`].
    pub all_recovered: usize,
    /// Realizations with fewer distinct peaks than given frequencies.
    pub fewer_peaks: usize,
    pub mean_peaks: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub config: SweepConfig,
    pub monotonicity: Monotonicity,
    pub violation_fraction: f64,
    /// Violations counted only beyond three combined standard errors.
    pub monotonicity_3sigma: Monotonicity,
    pub violation_fraction_3sigma: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SignalReport {
    pub seed: u64,
    pub scenarios: Vec<ScenarioSummary>,
    pub sweep: Option<SweepSummary>,
}

#[derive(Serialize)]
struct SpectrumRow {
    t_max: f64,
    epsilon: f64,
    omega: f64,
    amplitude: f64,
}

/// Scenario summaries, with the sorted spectrum and the peaks of the first
/// realization of each scenario as `(omega, amplitude)` pairs.
pub struct Scenarios {
    pub summaries: Vec<ScenarioSummary>,
    pub spectra: Vec<Vec<(f64, f64)>>,
    pub peaks: Vec<Vec<(f64, f64)>>,
}

struct Realization {
    peaks: Vec<(f64, f64)>,
    spectrum: Vec<(f64, f64)>,
}

fn realize(
    spec: &SignalSpec,
    clean: &[hubbard_core::Complex64],
    eps: f64,
    seed: u64,
) -> Result<Realization> {
    let noisy = inject_noise(clean, eps, seed)?.noisy;
    let s = Dft::new(noisy.len()).spectrum(&noisy, spec.dt);
    let found = PeakPolicy::default().find(&s);
    let mut spectrum: Vec<(f64, f64)> = s
        .frequencies
        .iter()
        .copied()
        .zip(s.amplitudes.iter().copied())
        .collect();
    spectrum.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(Realization {
        peaks: found
            .peaks
            .iter()
            .map(|p| (p.frequency, p.amplitude))
            .collect(),
        spectrum,
    })
}

/// Runs the three fixed scenarios over `realizations` noise draws each.
pub fn resolution_scenarios(seed: u64, realizations: usize) -> Result<Scenarios> {
    let mut summaries = Vec::new();
    let mut spectra = Vec::new();
    let mut peak_lists = Vec::new();
    for (case, &(t_max, eps)) in SCENARIOS.iter().enumerate() {
        let spec = SignalSpec::unit(SCENARIO_FREQUENCIES.to_vec(), SCENARIO_DT, t_max);
        let clean = synthesize(&spec)?;
        let draws = (0..realizations.max(1))
            .into_par_iter()
            .map(|r| {
                realize(
                    &spec,
                    &clean,
                    eps,
                    derive_seed(seed, STREAM_SCENARIO, ((case as u64) << 32) | r as u64),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        let all_recovered = draws
            .iter()
            .filter(|d| {
                SCENARIO_FREQUENCIES.iter().all(|w| {
                    d.peaks
                        .iter()
                        .any(|p| (p.0 - w).abs() <= RECOVERY_TOLERANCE)
                })
            })
            .count();
        let fewer_peaks = draws
            .iter()
            .filter(|d| d.peaks.len() < SCENARIO_FREQUENCIES.len())
            .count();
        let mean_peaks =
            draws.iter().map(|d| d.peaks.len() as f64).sum::<f64>() / draws.len() as f64;
        summaries.push(ScenarioSummary {
            t_max,
            epsilon: eps,
            realizations: draws.len(),
            bin_width: spec.bin_width(),
            all_recovered,
            fewer_peaks,
            mean_peaks,
        });
        let first = draws.into_iter().next().expect("at least one realization");
        spectra.push(first.spectrum);
        peak_lists.push(first.peaks);
    }
    Ok(Scenarios {
        summaries,
        spectra,
        peaks: peak_lists,
    })
}

pub fn signal(ctx: &Context, args: &SignalArgs, out: &mut OutputDir) -> Result<u64> {
    let mut config = ctx.config.signal.clone();
    let seed = ctx.seed.unwrap_or(config.seed);
    config.seed = seed;

    let s = resolution_scenarios(seed, args.realizations)?;
    let rows = |lists: &[Vec<(f64, f64)>]| -> Vec<SpectrumRow> {
        SCENARIOS
            .iter()
            .zip(lists)
            .flat_map(|(&(t_max, epsilon), list)| {
                list.iter().map(move |&(omega, amplitude)| SpectrumRow {
                    t_max,
                    epsilon,
                    omega,
                    amplitude,
                })
            })
            .collect()
    };
    out.write_csv("scenario_spectra.csv", &rows(&s.spectra))?;
    out.write_csv("scenario_peaks.csv", &rows(&s.peaks))?;

    let sweep = if args.no_sweep {
        None
    } else {
        let table = parallel::resolution_sweep(&config)?;
        out.write_csv("resolution_sweep.csv", &table.cells)?;
        let raw = monotonicity(&table, 0.0);
        let strict = monotonicity(&table, 3.0);
        Some(SweepSummary {
            config,
            violation_fraction: raw.violation_fraction(),
            monotonicity: raw,
            violation_fraction_3sigma: strict.violation_fraction(),
            monotonicity_3sigma: strict,
        })
    };
    let report = SignalReport {
        seed,
        scenarios: s.summaries,
        sweep,
    };
    out.write_json("signal.json", &report)?;
    Ok(seed)
}
