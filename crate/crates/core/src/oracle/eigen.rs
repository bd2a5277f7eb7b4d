use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::math;
use crate::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigenpairs of a Hermitian matrix, eigenvalues ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    /// Column-major: eigenvector `k` occupies `vectors[k * n .. (k + 1) * n]`.
    pub vectors: Vec<Complex64>,
    pub n: usize,
}

impl EigenDecomposition {
    pub fn vector(&self, k: usize) -> &[Complex64] {
        &self.vectors[k * self.n..(k + 1) * self.n]
    }
}

/// Diagonalizes a Hermitian `n x n` matrix (row-major) with the cyclic
/// complex Jacobi method.
///
/// Ties in the ascending sort keep the solver's column order, and each
/// eigenvector is phased so its first largest-magnitude entry is real and
/// positive, making the output deterministic.
pub fn hermitian_eigen(matrix: &[Complex64], n: usize) -> Result<EigenDecomposition> {
    if matrix.len() != n * n {
        return Err(Error::Dimension {
            expected: n * n,
            got: matrix.len(),
        });
    }
    let mut a = matrix.to_vec();
    let mut v = vec![Complex64::new(0.0, 0.0); n * n];
    for k in 0..n {
        v[k * n + k] = Complex64::new(1.0, 0.0);
    }
    // Symmetrize away rounding noise and force a real diagonal.
    for r in 0..n {
        a[r * n + r] = Complex64::new(a[r * n + r].re, 0.0);
        for c in r + 1..n {
            let m = (a[r * n + c] + a[c * n + r].conj()) * 0.5;
            a[r * n + c] = m;
            a[c * n + r] = m.conj();
        }
    }
    let scale = math::sqrt(a.iter().map(|z| z.norm_sqr()).sum::<f64>()).max(f64::MIN_POSITIVE);

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|r| (r + 1..n).map(move |c| (r, c)))
            .map(|(r, c)| a[r * n + c].norm_sqr())
            .sum();
        if math::sqrt(2.0 * off) <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].re.total_cmp(&a[j * n + j].re).then(i.cmp(&j)));
    let values = order.iter().map(|&k| a[k * n + k].re).collect();
    let mut vectors = Vec::with_capacity(n * n);
    for &k in &order {
        let col: Vec<Complex64> = (0..n).map(|r| v[r * n + k]).collect();
        let mut best = 0;
        for (r, z) in col.iter().enumerate() {
            if z.norm() > col[best].norm() * (1.0 + 1e-9) {
                best = r;
            }
        }
        let phase = if col[best].norm() > 0.0 {
            col[best].conj() / col[best].norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        vectors.extend(col.into_iter().map(|z| z * phase));
    }
    Ok(EigenDecomposition { values, vectors, n })
}

/// One Jacobi rotation `A <- J† A J`, `V <- V J` zeroing `A[p][q]`, with
/// `J_pp = J_qq = c`, `J_pq = s e^{i phi}`, `J_qp = -s e^{-i phi}` where
/// `A[p][q] = |g| e^{i phi}`.
fn rotate(a: &mut [Complex64], v: &mut [Complex64], n: usize, p: usize, q: usize) {
    let g = a[p * n + q];
    let mag = g.norm();
    if mag == 0.0 {
        return;
    }
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    if mag <= 1e-18 * (math::abs(app) + math::abs(aqq)) {
        a[p * n + q] = Complex64::new(0.0, 0.0);
        a[q * n + p] = Complex64::new(0.0, 0.0);
        return;
    }
    let e = g / mag;
    let theta = (aqq - app) / (2.0 * mag);
    let t = {
        let t = 1.0 / (math::abs(theta) + math::sqrt(theta * theta + 1.0));
        if theta < 0.0 {
            -t
        } else {
            t
        }
    };
    let c = 1.0 / math::sqrt(t * t + 1.0);
    let s = t * c;
    let jpq = e * s;
    let jqp = -e.conj() * s;

    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = akp * c + akq * jqp;
        a[k * n + q] = akp * jpq + akq * c;
    }
    for k in 0..n {
        let apk = a[p * n + k];
        let aqk = a[q * n + k];
        a[p * n + k] = apk * c + aqk * jqp.conj();
        a[q * n + k] = apk * jpq.conj() + aqk * c;
    }
    a[p * n + q] = Complex64::new(0.0, 0.0);
    a[q * n + p] = Complex64::new(0.0, 0.0);
    a[p * n + p] = Complex64::new(a[p * n + p].re, 0.0);
    a[q * n + q] = Complex64::new(a[q * n + q].re, 0.0);
    for k in 0..n {
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = vkp * c + vkq * jqp;
        v[k * n + q] = vkp * jpq + vkq * c;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn two_by_two_complex() {
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2.
        let m = [c(1.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(1.0, 0.0)];
        let e = hermitian_eigen(&m, 2).unwrap();
        assert!((e.values[0] - 0.0).abs() < 1e-14);
        assert!((e.values[1] - 2.0).abs() < 1e-14);
        for k in 0..2 {
            let x = e.vector(k);
            let hx0 = m[0] * x[0] + m[1] * x[1];
            let hx1 = m[2] * x[0] + m[3] * x[1];
            assert!((hx0 - x[0] * e.values[k]).norm() < 1e-13);
            assert!((hx1 - x[1] * e.values[k]).norm() < 1e-13);
        }
    }

    #[test]
    fn residuals_on_dense_hermitian() {
        let n = 9;
        let mut m = vec![c(0.0, 0.0); n * n];
        for r in 0..n {
            for col in r..n {
                let z = c(
                    ((r * 7 + col * 3) % 5) as f64 - 2.0,
                    if r == col {
                        0.0
                    } else {
                        ((r + 2 * col) % 3) as f64 - 1.0
                    },
                );
                m[r * n + col] = z;
                m[col * n + r] = z.conj();
            }
        }
        let e = hermitian_eigen(&m, n).unwrap();
        for k in 0..n {
            let x = e.vector(k);
            let norm: f64 = x.iter().map(|z| z.norm_sqr()).sum();
            assert!((norm - 1.0).abs() < 1e-12);
            for r in 0..n {
                let hx: Complex64 = (0..n).map(|col| m[r * n + col] * x[col]).sum();
                assert!((hx - x[r] * e.values[k]).norm() < 1e-11);
            }
        }
        assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn dimension_mismatch() {
        assert!(hermitian_eigen(&[c(1.0, 0.0); 3], 2).is_err());
    }
}
