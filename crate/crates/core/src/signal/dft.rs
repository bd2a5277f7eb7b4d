use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::math;

/// Discrete Fourier transform of a fixed length with a precomputed twiddle
/// table. Forward sums are unnormalized: `X_j = sum_n x_n exp(-2 pi i j n / N)`.
#[derive(Debug, Clone)]
pub struct Dft {
    n: usize,
    twiddle: Vec<Complex64>,
}

impl Dft {
    pub fn new(n: usize) -> Self {
        let twiddle = (0..n)
            .map(|k| {
                let arg = -2.0 * PI * k as f64 / n as f64;
                Complex64::new(math::cos(arg), math::sin(arg))
            })
            .collect();
        Dft { n, twiddle }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// # Panics
    /// If `x.len()` differs from the transform length.
    pub fn forward(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.n, "DFT length mismatch");
        (0..self.n)
            .map(|j| {
                let mut acc = Complex64::new(0.0, 0.0);
                let mut idx = 0usize;
                for &v in x {
                    acc += v * self.twiddle[idx];
                    idx += j;
                    if idx >= self.n {
                        idx -= self.n;
                    }
                }
                acc
            })
            .collect()
    }

    /// `x_n = (1/N) sum_j X_j exp(2 pi i j n / N)`
    pub fn inverse(&self, x: &[Complex64]) -> Vec<Complex64> {
        let conj: Vec<Complex64> = x.iter().map(|z| z.conj()).collect();
        self.forward(&conj)
            .into_iter()
            .map(|z| z.conj() / self.n as f64)
            .collect()
    }

    /// Angular frequency of bin `j` for sample step `dt`, with bins at or
    /// past `N/2` mapped to negative frequencies.
    pub fn frequency(&self, j: usize, dt: f64) -> f64 {
        let signed = if 2 * j < self.n {
            j as f64
        } else {
            j as f64 - self.n as f64
        };
        2.0 * PI * signed / (self.n as f64 * dt)
    }

    pub fn spectrum(&self, x: &[Complex64], dt: f64) -> Spectrum {
        Spectrum::from_coefficients(self.forward(x), dt)
    }
}

/// Amplitude spectrum `|X_j| / N` on the bin grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub dt: f64,
    pub frequencies: Vec<f64>,
    pub amplitudes: Vec<f64>,
}

impl Spectrum {
    pub fn from_coefficients(coeffs: Vec<Complex64>, dt: f64) -> Self {
        let n = coeffs.len();
        let frequencies = (0..n)
            .map(|j| {
                let signed = if 2 * j < n {
                    j as f64
                } else {
                    j as f64 - n as f64
                };
                2.0 * PI * signed / (n as f64 * dt)
            })
            .collect();
        let amplitudes = coeffs.iter().map(|z| z.norm() / n as f64).collect();
        Spectrum {
            dt,
            frequencies,
            amplitudes,
        }
    }

    pub fn bin_width(&self) -> f64 {
        2.0 * PI / (self.amplitudes.len() as f64 * self.dt)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parseval() {
        let x: Vec<Complex64> = (0..37)
            .map(|k| Complex64::new(math::sin(k as f64 * 0.7), math::cos(k as f64 * 1.3) - 0.2))
            .collect();
        let d = Dft::new(x.len());
        let big = d.forward(&x);
        let time: f64 = x.iter().map(|z| z.norm_sqr()).sum();
        let freq: f64 = big.iter().map(|z| z.norm_sqr()).sum::<f64>() / x.len() as f64;
        assert!((time - freq).abs() < 1e-9 * time);
        let back = d.inverse(&big);
        for (a, b) in x.iter().zip(&back) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn negative_frequencies_wrap() {
        let d = Dft::new(4);
        assert_eq!(d.frequency(1, 1.0), PI / 2.0);
        assert_eq!(d.frequency(2, 1.0), -PI);
        assert_eq!(d.frequency(3, 1.0), -PI / 2.0);
    }
}
