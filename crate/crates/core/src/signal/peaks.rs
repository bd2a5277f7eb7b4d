use alloc::vec::Vec;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::dft::{Dft, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Threshold {
    /// Multiple of the median bin amplitude.
    MedianMultiple(f64),
    Absolute(f64),
}

/// How local maxima of an amplitude spectrum are accepted as peaks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PeakPolicy {
    pub threshold: Threshold,
    /// Floor on the threshold as a fraction of the largest amplitude, which
    /// keeps rounding noise in clean spectra from registering.
    pub relative_floor: f64,
    /// Required prominence as a multiple of the height threshold. The
    /// prominence of a maximum is its height above the higher of the two
    /// lowest points reached before the spectrum climbs above it on either
    /// side (circularly). 0 disables the test.
    pub prominence: f64,
    /// Minimum separation in bins; of two maxima closer than this the
    /// smaller one is dropped. 1 keeps every local maximum.
    pub min_separation: usize,
}

impl Default for PeakPolicy {
    fn default() -> Self {
        PeakPolicy {
            threshold: Threshold::MedianMultiple(5.0),
            relative_floor: 1e-9,
            prominence: 1.0,
            min_separation: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Peak {
    pub bin: usize,
    pub frequency: f64,
    pub amplitude: f64,
}

/// Peaks sorted by frequency, together with the threshold applied.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeakSet {
    pub peaks: Vec<Peak>,
    pub threshold: f64,
    pub bin_width: f64,
}

impl PeakSet {
    pub fn len(&self) -> usize {
        self.peaks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.peaks.is_empty()
    }

    pub fn frequencies(&self) -> Vec<f64> {
        self.peaks.iter().map(|p| p.frequency).collect()
    }
}

fn median(values: &[f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    let mut v = values.to_vec();
    let mid = v.len() / 2;
    let (_, m, _) = v.select_nth_unstable_by(mid, f64::total_cmp);
    *m
}

impl PeakPolicy {
    pub fn threshold_for(&self, amplitudes: &[f64]) -> f64 {
        let base = match self.threshold {
            Threshold::MedianMultiple(k) => k * median(amplitudes),
            Threshold::Absolute(t) => t,
        };
        let max = amplitudes.iter().copied().fold(0.0, f64::max);
        base.max(self.relative_floor * max)
    }

    /// Circular local maxima strictly above the threshold. A plateau
    /// contributes its first bin.
    pub fn find(&self, spectrum: &Spectrum) -> PeakSet {
        self.find_in(
            &spectrum.amplitudes,
            &spectrum.frequencies,
            spectrum.bin_width(),
        )
    }

    /// [`find`](Self::find) on bare amplitude and frequency slices.
    pub fn find_in(&self, amp: &[f64], frequencies: &[f64], bin_width: f64) -> PeakSet {
        let n = amp.len();
        let threshold = self.threshold_for(amp);
        let mut candidates: Vec<usize> = (0..n)
            .filter(|&j| {
                let left = amp[(j + n - 1) % n];
                let right = amp[(j + 1) % n];
                amp[j] > threshold && (n == 1 || (amp[j] > left && amp[j] >= right))
            })
            .collect();
        if self.prominence > 0.0 {
            let need = self.prominence * threshold;
            candidates.retain(|&j| prominence(amp, j) > need);
        }
        if self.min_separation > 1 && candidates.len() > 1 {
            candidates.sort_by(|&a, &b| amp[b].total_cmp(&amp[a]).then(a.cmp(&b)));
            let mut kept: Vec<usize> = Vec::new();
            for c in candidates {
                let close = kept.iter().any(|&k| {
                    let d = c.abs_diff(k);
                    d.min(n - d) < self.min_separation
                });
                if !close {
                    kept.push(c);
                }
            }
            candidates = kept;
        }
        let mut peaks: Vec<Peak> = candidates
            .into_iter()
            .map(|bin| Peak {
                bin,
                frequency: frequencies[bin],
                amplitude: amp[bin],
            })
            .collect();
        peaks.sort_by(|a, b| a.frequency.total_cmp(&b.frequency));
        PeakSet {
            peaks,
            threshold,
            bin_width,
        }
    }
}

/// Prominence of bin `j` in a circular sequence.
pub fn prominence(amp: &[f64], j: usize) -> f64 {
    let n = amp.len();
    let h = amp[j];
    let walk = |step: usize| {
        let mut lowest = h;
        let mut k = j;
        for _ in 1..n {
            k = (k + step) % n;
            if amp[k] > h {
                break;
            }
            lowest = lowest.min(amp[k]);
        }
        lowest
    };
    h - walk(n - 1).max(walk(1))
}

/// Transforms the samples and extracts peaks.
pub fn spectrum_peaks(samples: &[Complex64], dt: f64, policy: &PeakPolicy) -> PeakSet {
    let spectrum = Dft::new(samples.len()).spectrum(samples, dt);
    policy.find(&spectrum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signal::{synthesize, SignalSpec};

    #[test]
    fn constant_has_one_peak_at_zero() {
        let x = alloc::vec![Complex64::new(1.0, 0.0); 40];
        let p = spectrum_peaks(&x, 0.5, &PeakPolicy::default());
        assert_eq!(p.len(), 1);
        assert_eq!(p.peaks[0].frequency, 0.0);
        assert!((p.peaks[0].amplitude - 1.0).abs() < 1e-12);
    }

    #[test]
    fn on_grid_tone_is_exact() {
        let spec = SignalSpec::unit(alloc::vec![0.0], 1.0, 63.0);
        let w = 5.0 * spec.bin_width();
        let spec = SignalSpec::unit(alloc::vec![w], 1.0, 63.0);
        let p = spectrum_peaks(&synthesize(&spec).unwrap(), 1.0, &PeakPolicy::default());
        assert_eq!(p.len(), 1);
        assert!((p.peaks[0].frequency - w).abs() < 1e-12);
    }

    #[test]
    fn separation_drops_smaller_neighbour() {
        let spectrum = Spectrum {
            dt: 1.0,
            frequencies: (0..8).map(|k| k as f64).collect(),
            amplitudes: alloc::vec![0.0, 1.0, 0.5, 0.9, 0.0, 0.0, 0.0, 0.0],
        };
        let mut policy = PeakPolicy {
            threshold: Threshold::Absolute(0.1),
            prominence: 0.0,
            ..PeakPolicy::default()
        };
        assert_eq!(policy.find(&spectrum).len(), 2);
        policy.min_separation = 3;
        let p = policy.find(&spectrum);
        assert_eq!(p.len(), 1);
        assert_eq!(p.peaks[0].bin, 1);
    }
}

#[cfg(test)]
mod prominence_tests {
    use super::*;

    #[test]
    fn prominence_of_shoulder_and_summit() {
        let a = [0.0, 1.0, 0.5, 0.8, 0.2, 0.0];
        assert_eq!(prominence(&a, 1), 1.0);
        assert!((prominence(&a, 3) - 0.3).abs() < 1e-15);
    }
}
