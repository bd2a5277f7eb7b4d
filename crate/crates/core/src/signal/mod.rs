//! Spectral peak recovery from finite, noisy time series.
//!
//! A signal `s(t) = sum_k a_k exp(i w_k t)` is sampled at `t_n = n dt` for
//! `n dt <= T_max`, each sample is displaced by a worst-case `+-eps` in its
//! real and imaginary parts, and the spectrum's local maxima above a noise
//! threshold are compared with the true frequencies.
//!
//! With `N` samples the DFT bins sit at `w_j = 2 pi j / (N dt)`; the record
//! length `N dt` exceeds `T_max` by less than one step.

mod dft;
mod peaks;
mod score;
mod sweep;
mod synth;

pub use dft::{Dft, Spectrum};
pub use peaks::{prominence, spectrum_peaks, Peak, PeakPolicy, PeakSet, Threshold};
pub use score::{match_peaks, score_recovery, RecoveryScore, ScoreOptions};
pub use sweep::{
    arange, draw_frequency_sets, monotonicity, resolution_sweep, sweep_row, FrequencySet,
    Monotonicity, ScoreReference, SweepCell, SweepConfig, SweepTable,
};
pub use synth::{inject_noise, sign_pattern, synthesize, NoisyTrace, SignalSpec};
