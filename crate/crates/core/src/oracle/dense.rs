use alloc::format;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::model::{Pauli, PauliOperatorSum, PauliString};
use crate::{Error, Result};

/// Largest mode count accepted by [`realize_dense`].
pub const MAX_DENSE_MODES: usize = 14;

/// A square complex matrix of dimension `2^n_qubits`, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator {
    n_qubits: usize,
    dim: usize,
    data: Vec<Complex64>,
}

/// Bit masks describing the action of a Pauli string on basis states:
/// `P |b> = i^y * (-1)^popcount(b & z) |b ^ x>`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PauliMasks {
    pub x: u64,
    pub z: u64,
    pub y_phase: Complex64,
}

impl PauliMasks {
    pub fn new(s: &PauliString) -> Self {
        let n = s.letters.len();
        let (mut x, mut z, mut ny) = (0u64, 0u64, 0u32);
        for (q, &p) in s.letters.iter().enumerate() {
            let bit = 1u64 << (n - 1 - q);
            match p {
                Pauli::I => {}
                Pauli::X => x |= bit,
                Pauli::Z => z |= bit,
                Pauli::Y => {
                    x |= bit;
                    z |= bit;
                    ny += 1;
                }
            }
        }
        let y_phase = match ny % 4 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
        PauliMasks { x, z, y_phase }
    }

    /// Target index and phase of `P |b>`.
    #[inline]
    pub fn act(&self, b: usize) -> (usize, Complex64) {
        let sign = if (b as u64 & self.z).count_ones() % 2 == 0 {
            1.0
        } else {
            -1.0
        };
        (b ^ self.x as usize, self.y_phase * sign)
    }
}

fn check_modes(n: usize) -> Result<()> {
    if n > MAX_DENSE_MODES {
        Err(Error::ResourceLimit(format!(
            "{n} modes exceed the dense limit of {MAX_DENSE_MODES}; exact results are \
             limited to desk-scale lattices with 2 nx ny orbitals <= {MAX_DENSE_MODES}"
        )))
    } else {
        Ok(())
    }
}

/// Applies a Pauli sum to a state vector of matching dimension.
pub fn apply_pauli_sum(op: &PauliOperatorSum, psi: &[Complex64]) -> Result<Vec<Complex64>> {
    let dim = 1usize
        .checked_shl(op.n_qubits() as u32)
        .filter(|_| op.n_qubits() < 64)
        .ok_or_else(|| Error::ResourceLimit(format!("{} qubits", op.n_qubits())))?;
    if psi.len() != dim {
        return Err(Error::Dimension {
            expected: dim,
            got: psi.len(),
        });
    }
    let mut out = alloc::vec![Complex64::new(0.0, 0.0); dim];
    for t in op.terms() {
        let m = PauliMasks::new(t);
        for (b, &amp) in psi.iter().enumerate() {
            if amp.re == 0.0 && amp.im == 0.0 {
                continue;
            }
            let (target, phase) = m.act(b);
            out[target] += t.coeff * phase * amp;
        }
    }
    Ok(out)
}

/// Builds the dense matrix of a Pauli sum.
///
/// Fails with [`Error::ResourceLimit`] beyond [`MAX_DENSE_MODES`] qubits or
/// when the matrix cannot be allocated.
pub fn realize_dense(op: &PauliOperatorSum) -> Result<DenseOperator> {
    let n = op.n_qubits();
    check_modes(n)?;
    let dim = 1usize << n;
    let mut data = Vec::new();
    data.try_reserve_exact(dim * dim).map_err(|_| {
        Error::ResourceLimit(format!("cannot allocate a {dim}x{dim} complex matrix"))
    })?;
    data.resize(dim * dim, Complex64::new(0.0, 0.0));
    for t in op.terms() {
        let m = PauliMasks::new(t);
        for b in 0..dim {
            let (target, phase) = m.act(b);
            data[target * dim + b] += t.coeff * phase;
        }
    }
    Ok(DenseOperator {
        n_qubits: n,
        dim,
        data,
    })
}

impl DenseOperator {
    pub fn from_rows(n_qubits: usize, data: Vec<Complex64>) -> Result<Self> {
        check_modes(n_qubits)?;
        let dim = 1usize << n_qubits;
        if data.len() != dim * dim {
            return Err(Error::Dimension {
                expected: dim * dim,
                got: data.len(),
            });
        }
        Ok(DenseOperator {
            n_qubits,
            dim,
            data,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|k| self.get(k, k)).sum()
    }

    /// Largest entry of `|A - A†|`.
    pub fn hermiticity_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..self.dim {
            for c in r..self.dim {
                worst = worst.max((self.get(r, c) - self.get(c, r).conj()).norm());
            }
        }
        worst
    }

    pub fn apply(&self, psi: &[Complex64]) -> Result<Vec<Complex64>> {
        if psi.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                got: psi.len(),
            });
        }
        Ok((0..self.dim)
            .map(|r| {
                self.data[r * self.dim..(r + 1) * self.dim]
                    .iter()
                    .zip(psi)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// Whether every entry connecting basis states of different popcount
    /// is below `tol`.
    pub fn conserves_popcount(&self, tol: f64) -> bool {
        for r in 0..self.dim {
            for c in 0..self.dim {
                if r.count_ones() != c.count_ones() && self.get(r, c).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    /// The principal submatrix on the given basis indices, row-major.
    pub fn submatrix(&self, basis: &[usize]) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(basis.len() * basis.len());
        for &r in basis {
            for &c in basis {
                out.push(self.get(r, c));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::PauliString;

    fn single(letters: &[Pauli], c: f64) -> PauliOperatorSum {
        PauliOperatorSum::from_strings(
            letters.len(),
            [PauliString {
                letters: letters.to_vec(),
                coeff: Complex64::new(c, 0.0),
            }],
        )
    }

    #[test]
    fn identity_realizes_to_scaled_identity() {
        let d = realize_dense(&PauliOperatorSum::identity(2, 2.5)).unwrap();
        for r in 0..4 {
            for c in 0..4 {
                let want = if r == c { 2.5 } else { 0.0 };
                assert_eq!(d.get(r, c), Complex64::new(want, 0.0));
            }
        }
    }

    #[test]
    fn z0_is_most_significant() {
        let d = realize_dense(&single(&[Pauli::Z, Pauli::I], 1.0)).unwrap();
        let diag: Vec<f64> = (0..4).map(|k| d.get(k, k).re).collect();
        assert_eq!(diag, [1.0, 1.0, -1.0, -1.0]);
    }

    #[test]
    fn y_matrix_elements() {
        let d = realize_dense(&single(&[Pauli::Y], 1.0)).unwrap();
        assert_eq!(d.get(0, 1), Complex64::new(0.0, -1.0));
        assert_eq!(d.get(1, 0), Complex64::new(0.0, 1.0));
    }

    #[test]
    fn apply_matches_dense_product() {
        let op = single(&[Pauli::X, Pauli::Y, Pauli::Z], 0.7)
            .add(&single(&[Pauli::Z, Pauli::I, Pauli::X], -1.3));
        let d = realize_dense(&op).unwrap();
        let psi: Vec<Complex64> = (0..8)
            .map(|k| Complex64::new(k as f64, 1.0 - k as f64))
            .collect();
        let a = d.apply(&psi).unwrap();
        let b = apply_pauli_sum(&op, &psi).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).norm() < 1e-12);
        }
    }

    #[test]
    fn oversize_is_resource_limit() {
        let op = PauliOperatorSum::identity(MAX_DENSE_MODES + 1, 1.0);
        assert!(matches!(realize_dense(&op), Err(Error::ResourceLimit(_))));
    }
}
