use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use rand::RngCore;
use serde::{Deserialize, Serialize};

use crate::{math, seed, Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignalSpec {
    pub frequencies: Vec<f64>,
    pub amplitudes: Vec<f64>,
    pub dt: f64,
    pub t_max: f64,
}

impl SignalSpec {
    pub fn new(frequencies: Vec<f64>, amplitudes: Vec<f64>, dt: f64, t_max: f64) -> Self {
        SignalSpec {
            frequencies,
            amplitudes,
            dt,
            t_max,
        }
    }

    /// Unit amplitudes for every frequency.
    pub fn unit(frequencies: Vec<f64>, dt: f64, t_max: f64) -> Self {
        let amplitudes = alloc::vec![1.0; frequencies.len()];
        Self::new(frequencies, amplitudes, dt, t_max)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return Err(Error::spec(format!("dt must be positive, got {}", self.dt)));
        }
        if !(self.t_max >= 2.0 * self.dt && self.t_max.is_finite()) {
            return Err(Error::spec(format!(
                "T_max must be at least 2 dt, got T_max={} dt={}",
                self.t_max, self.dt
            )));
        }
        if self.frequencies.len() != self.amplitudes.len() {
            return Err(Error::spec("frequencies and amplitudes differ in length"));
        }
        if self.amplitudes.iter().any(|&a| !(a > 0.0 && a.is_finite())) {
            return Err(Error::spec("amplitudes must be positive"));
        }
        let nyquist = PI / self.dt;
        if let Some(w) = self
            .frequencies
            .iter()
            .find(|w| w.is_nan() || math::abs(**w) >= nyquist)
        {
            return Err(Error::spec(format!(
                "frequency {w} violates the Nyquist bound {nyquist}"
            )));
        }
        Ok(())
    }

    /// Number of samples, `floor(T_max / dt) + 1`.
    pub fn n_samples(&self) -> usize {
        math::floor(self.t_max / self.dt + 1e-9) as usize + 1
    }

    /// DFT bin spacing `2 pi / (N dt)`.
    pub fn bin_width(&self) -> f64 {
        2.0 * PI / (self.n_samples() as f64 * self.dt)
    }
}

/// Noise-free and noisy samples of one realization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NoisyTrace {
    pub clean: Vec<Complex64>,
    pub noisy: Vec<Complex64>,
    pub epsilon: f64,
    pub seed: u64,
}

/// Samples `sum_k a_k exp(i w_k n dt)`.
pub fn synthesize(spec: &SignalSpec) -> Result<Vec<Complex64>> {
    spec.validate()?;
    Ok((0..spec.n_samples())
        .map(|n| {
            let t = n as f64 * spec.dt;
            spec.frequencies
                .iter()
                .zip(&spec.amplitudes)
                .map(|(&w, &a)| Complex64::new(math::cos(w * t), math::sin(w * t)) * a)
                .sum()
        })
        .collect())
}

/// `len` values `(+-1) + i (+-1)` with independent signs drawn from `seed`.
pub fn sign_pattern(len: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = seed::rng(seed);
    let mut out = Vec::with_capacity(len);
    let mut bits = 0u64;
    let mut left = 0;
    let mut next = |rng: &mut rand_chacha::ChaCha8Rng| {
        if left == 0 {
            bits = rng.next_u64();
            left = 64;
        }
        left -= 1;
        let b = bits & 1;
        bits >>= 1;
        if b == 1 {
            1.0
        } else {
            -1.0
        }
    };
    for _ in 0..len {
        let re = next(&mut rng);
        let im = next(&mut rng);
        out.push(Complex64::new(re, im));
    }
    out
}

/// Displaces the real and imaginary part of every sample by exactly
/// `+-epsilon`, signs drawn independently from `seed`.
pub fn inject_noise(clean: &[Complex64], epsilon: f64, seed: u64) -> Result<NoisyTrace> {
    if !(epsilon >= 0.0 && epsilon.is_finite()) {
        return Err(Error::range(
            "epsilon",
            format!("{epsilon} must be non-negative"),
        ));
    }
    let noisy = if epsilon == 0.0 {
        clean.to_vec()
    } else {
        clean
            .iter()
            .zip(sign_pattern(clean.len(), seed))
            .map(|(c, s)| c + s * epsilon)
            .collect()
    };
    Ok(NoisyTrace {
        clean: clean.to_vec(),
        noisy,
        epsilon,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_frequency_is_constant() {
        let s = synthesize(&SignalSpec::unit(alloc::vec![0.0], 0.5, 3.0)).unwrap();
        assert_eq!(s.len(), 7);
        assert!(s.iter().all(|z| *z == Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn nyquist_violation_rejected() {
        let spec = SignalSpec::unit(alloc::vec![2.2], 1.5, 100.0);
        assert!(matches!(synthesize(&spec), Err(Error::Spec(_))));
    }

    #[test]
    fn noise_is_exactly_epsilon_per_component() {
        let clean = synthesize(&SignalSpec::unit(alloc::vec![0.3, -1.1], 1.5, 100.0)).unwrap();
        let t = inject_noise(&clean, 0.5, 11).unwrap();
        for (c, n) in t.clean.iter().zip(&t.noisy) {
            assert!((((n - c).re).abs() - 0.5).abs() < 1e-12);
            assert!((((n - c).im).abs() - 0.5).abs() < 1e-12);
        }
        assert_eq!(t, inject_noise(&clean, 0.5, 11).unwrap());
        assert_eq!(inject_noise(&clean, 0.0, 11).unwrap().noisy, clean);
    }
}
