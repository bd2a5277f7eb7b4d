use std::f64::consts::PI;

use anyhow::{Context as _, Result};
use hubbard_core::model::{encode_hamiltonian, HubbardSpec, ObservableSpec};
use hubbard_core::oracle::{diagonalize, dynamic_correlation, ground_state, realize_dense};
use hubbard_core::signal::{Dft, PeakPolicy};
use serde::Serialize;

use crate::artifacts::OutputDir;
use crate::cli::{Context, OracleArgs};

/// Lines weaker than this fraction of the strongest are not expected to
/// produce a peak.
const LINE_FLOOR: f64 = 1e-3;

#[derive(Debug, Clone, Serialize)]
pub struct Line {
    pub frequency: f64,
    /// The frequency folded into the sampled band `[-pi/dt, pi/dt)`.
    pub aliased: f64,
    pub weight_re: f64,
    pub weight_im: f64,
    pub weight_abs: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct PeakCheck {
    pub frequency: f64,
    pub amplitude: f64,
    pub nearest_line: f64,
    pub distance_bins: f64,
    pub matched: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub spec: HubbardSpec,
    pub observable: ObservableSpec,
    pub dt: f64,
    pub t_max: f64,
    pub samples: usize,
    pub bin_width: f64,
    pub ground_energy: f64,
    pub degeneracy: usize,
    pub gap: f64,
    pub sector: Option<usize>,
    pub lines: Vec<Line>,
    pub peaks: Vec<PeakCheck>,
    pub unmatched_peaks: usize,
    pub warnings: Vec<String>,
}

#[derive(Serialize)]
struct TraceRow {
    t: f64,
    re: f64,
    im: f64,
}

#[derive(Serialize)]
struct SpectrumRow {
    omega: f64,
    amplitude: f64,
}

fn alias(f: f64, dt: f64) -> f64 {
    let band = 2.0 * PI / dt;
    f - band * (f / band + 0.5).floor()
}

pub fn oracle(ctx: &Context, args: &OracleArgs, out: &mut OutputDir) -> Result<u64> {
    let spec = ctx.config.spec(args.spec.as_deref())?;
    let observable: ObservableSpec =
        serde_json::from_str(&args.observable).context("parsing --observable")?;
    let h = encode_hamiltonian(&spec)?;
    let dense = realize_dense(&h)?;
    let spectrum = diagonalize(&dense)?;
    let gs = ground_state(&spectrum, args.sector)?;
    let (a, b) = observable.correlation_operators(&spec)?;
    let trace = dynamic_correlation(&spectrum, &a, &b, &gs, args.dt, args.t_max)?;

    let mut warnings = Vec::new();
    if gs.degenerate {
        warnings.push(format!("ground state is {}-fold degenerate", gs.degeneracy));
    }
    let nyquist = PI / args.dt;
    let strongest = trace
        .components
        .iter()
        .map(|c| c.weight.norm())
        .fold(0.0, f64::max);
    let lines: Vec<Line> = trace
        .components
        .iter()
        .map(|c| Line {
            frequency: c.frequency,
            aliased: alias(c.frequency, args.dt),
            weight_re: c.weight.re,
            weight_im: c.weight.im,
            weight_abs: c.weight.norm(),
        })
        .collect();
    for l in &lines {
        if l.frequency.abs() > nyquist && l.weight_abs > LINE_FLOOR * strongest {
            let w = format!(
                "line at {:.6} exceeds the Nyquist frequency pi/dt = {nyquist:.6} and aliases to {:.6}",
                l.frequency, l.aliased
            );
            if !warnings.contains(&w) {
                warnings.push(w);
            }
        }
    }

    let dft = Dft::new(trace.values.len());
    let spec_amp = dft.spectrum(&trace.values, args.dt);
    let bin = spec_amp.bin_width();
    let found = PeakPolicy::default().find(&spec_amp);
    let strong: Vec<f64> = lines
        .iter()
        .filter(|l| l.weight_abs > LINE_FLOOR * strongest)
        .map(|l| l.aliased)
        .collect();
    let peaks: Vec<PeakCheck> = found
        .peaks
        .iter()
        .map(|p| {
            let nearest = strong
                .iter()
                .copied()
                .min_by(|x, y| (x - p.frequency).abs().total_cmp(&(y - p.frequency).abs()))
                .unwrap_or(f64::NAN);
            let distance_bins = (nearest - p.frequency).abs() / bin;
            PeakCheck {
                frequency: p.frequency,
                amplitude: p.amplitude,
                nearest_line: nearest,
                distance_bins,
                matched: distance_bins <= 1.0,
            }
        })
        .collect();
    let unmatched_peaks = peaks.iter().filter(|p| !p.matched).count();
    if unmatched_peaks > 0 {
        warnings.push(format!(
            "{unmatched_peaks} spectral peaks are not within one bin of an eigenvalue difference"
        ));
    }
    for w in &warnings {
        eprintln!("warning: {w}");
    }

    let trace_rows: Vec<TraceRow> = trace
        .times
        .iter()
        .zip(&trace.values)
        .map(|(&t, v)| TraceRow {
            t,
            re: v.re,
            im: v.im,
        })
        .collect();
    let mut spectrum_rows: Vec<SpectrumRow> = spec_amp
        .frequencies
        .iter()
        .zip(&spec_amp.amplitudes)
        .map(|(&omega, &amplitude)| SpectrumRow { omega, amplitude })
        .collect();
    spectrum_rows.sort_by(|x, y| x.omega.total_cmp(&y.omega));
    out.write_csv("oracle_trace.csv", &trace_rows)?;
    out.write_csv("oracle_spectrum.csv", &spectrum_rows)?;
    out.write_csv("oracle_peaks.csv", &peaks)?;
    let report = OracleReport {
        spec,
        observable,
        dt: args.dt,
        t_max: args.t_max,
        samples: trace.values.len(),
        bin_width: bin,
        ground_energy: gs.energy,
        degeneracy: gs.degeneracy,
        gap: gs.gap,
        sector: gs.sector,
        lines,
        peaks,
        unmatched_peaks,
        warnings,
    };
    out.write_json("oracle.json", &report)?;
    Ok(ctx.seed.unwrap_or(0))
}
