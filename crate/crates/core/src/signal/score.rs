use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::peaks::PeakSet;
use super::synth::SignalSpec;
use crate::math;

/// Settings of the recovery metric.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScoreOptions {
    /// Largest frequency distance, in bins, at which a recovered peak can
    /// match a given frequency.
    pub match_tolerance_bins: f64,
}

impl Default for ScoreOptions {
    fn default() -> Self {
        ScoreOptions {
            match_tolerance_bins: 2.0,
        }
    }
}

/// Recovery quality of one spectrum.
///
/// With `n` given frequencies, bin width `b`, `M` matched pairs, `m` misses
/// and `s` spurious peaks:
///
/// ```text
/// freq_error  = mean_M |w_g - w_r| + b (m + s) / n
/// joint_error = freq_error + mean_M |a_g - a_r|
///               + (sum_missed a_g + sum_spurious a_r) / n
/// ```
///
/// Means over an empty match set are zero.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct RecoveryScore {
    pub freq_error: f64,
    pub joint_error: f64,
    pub matched: usize,
    pub missed: usize,
    pub spurious: usize,
}

/// Greedy nearest matching: all (given, found) pairs within tolerance are
/// taken in order of increasing frequency distance, each side at most once.
/// Returns `(given index, found index)` pairs.
pub fn match_peaks(given: &[f64], found: &[f64], tolerance: f64) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(f64, usize, usize)> = Vec::new();
    for (g, &wg) in given.iter().enumerate() {
        for (r, &wr) in found.iter().enumerate() {
            let d = math::abs(wg - wr);
            if d <= tolerance {
                pairs.push((d, g, r));
            }
        }
    }
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut used_g = alloc::vec![false; given.len()];
    let mut used_r = alloc::vec![false; found.len()];
    let mut out = Vec::new();
    for (_, g, r) in pairs {
        if !used_g[g] && !used_r[r] {
            used_g[g] = true;
            used_r[r] = true;
            out.push((g, r));
        }
    }
    out.sort_unstable();
    out
}

pub fn score_recovery(
    given: &SignalSpec,
    found: &PeakSet,
    options: &ScoreOptions,
) -> RecoveryScore {
    let bin = found.bin_width;
    let found_w = found.frequencies();
    let matches = match_peaks(
        &given.frequencies,
        &found_w,
        options.match_tolerance_bins * bin,
    );
    let n = given.frequencies.len().max(1) as f64;
    let matched = matches.len();
    let missed = given.frequencies.len() - matched;
    let spurious = found.len() - matched;

    let (mut df, mut da) = (0.0, 0.0);
    for &(g, r) in &matches {
        df += math::abs(given.frequencies[g] - found_w[r]);
        da += math::abs(given.amplitudes[g] - found.peaks[r].amplitude);
    }
    if matched > 0 {
        df /= matched as f64;
        da /= matched as f64;
    }
    let mut g_hit = alloc::vec![false; given.frequencies.len()];
    let mut r_hit = alloc::vec![false; found.len()];
    for &(g, r) in &matches {
        g_hit[g] = true;
        r_hit[r] = true;
    }
    let missed_amp: f64 = given
        .amplitudes
        .iter()
        .zip(&g_hit)
        .filter(|(_, &h)| !h)
        .map(|(a, _)| a)
        .sum();
    let spurious_amp: f64 = found
        .peaks
        .iter()
        .zip(&r_hit)
        .filter(|(_, &h)| !h)
        .map(|(p, _)| p.amplitude)
        .sum();

    let freq_error = df + bin * (missed + spurious) as f64 / n;
    RecoveryScore {
        freq_error,
        joint_error: freq_error + da + (missed_amp + spurious_amp) / n,
        matched,
        missed,
        spurious,
    }
}
