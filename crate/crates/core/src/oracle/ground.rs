use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::dense::{apply_pauli_sum, DenseOperator};
use super::eigen::hermitian_eigen;
use crate::math;
use crate::model::PauliOperatorSum;
use crate::{Error, Result};

/// Largest tolerated `|H - H†|` entry.
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Eigenvalues closer than this are treated as one level.
pub const DEGENERACY_TOL: f64 = 1e-9;

/// Eigenpairs of one invariant block of the Hamiltonian.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumBlock {
    /// Particle number of the block, `None` when the Hamiltonian does not
    /// conserve it and the whole space forms one block.
    pub particles: Option<usize>,
    /// Full-space basis indices spanned by the block.
    pub basis: Vec<usize>,
    pub energies: Vec<f64>,
    /// Column-major eigenvectors in block coordinates.
    pub vectors: Vec<Complex64>,
}

impl SpectrumBlock {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn vector(&self, k: usize) -> &[Complex64] {
        let n = self.basis.len();
        &self.vectors[k * n..(k + 1) * n]
    }

    /// Eigenvector `k` embedded in the full space.
    pub fn embed(&self, k: usize, dim: usize) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); dim];
        for (&b, &z) in self.basis.iter().zip(self.vector(k)) {
            out[b] = z;
        }
        out
    }
}

/// Full eigendecomposition of a dense Hamiltonian, block-diagonalized by
/// particle number when the Hamiltonian conserves it.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub dim: usize,
    pub blocks: Vec<SpectrumBlock>,
}

impl Spectrum {
    pub fn conserves_number(&self) -> bool {
        self.blocks.iter().all(|b| b.particles.is_some())
    }

    /// All eigenvalues, ascending.
    pub fn energies(&self) -> Vec<f64> {
        let mut e: Vec<f64> = self
            .blocks
            .iter()
            .flat_map(|b| b.energies.iter().copied())
            .collect();
        e.sort_by(f64::total_cmp);
        e
    }

    /// Eigenvalues of the given particle-number sector, ascending.
    pub fn sector_energies(&self, particles: usize) -> Option<&[f64]> {
        self.blocks
            .iter()
            .find(|b| b.particles == Some(particles))
            .map(|b| b.energies.as_slice())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroundStateResult {
    pub energy: f64,
    /// Unit-norm ground state in the full space.
    pub state: Vec<Complex64>,
    /// Number of eigenvalues within [`DEGENERACY_TOL`] of the ground energy.
    pub degeneracy: usize,
    pub degenerate: bool,
    /// Distance to the next distinct level, zero if there is none.
    pub gap: f64,
    /// Sector the search was restricted to.
    pub sector: Option<usize>,
}

/// Diagonalizes every invariant block of `h`.
///
/// Fails with a contract violation when `h` is not Hermitian within
/// [`HERMITICITY_TOL`].
pub fn diagonalize(h: &DenseOperator) -> Result<Spectrum> {
    let herm = h.hermiticity_error();
    if herm > HERMITICITY_TOL {
        return Err(Error::contract(format!(
            "operator is not Hermitian (max |H - H†| = {herm:e})"
        )));
    }
    let dim = h.dim();
    let blocks: Vec<(Option<usize>, Vec<usize>)> = if h.conserves_popcount(1e-12) {
        (0..=h.n_qubits())
            .map(|n| {
                let basis = (0..dim).filter(|b| b.count_ones() as usize == n).collect();
                (Some(n), basis)
            })
            .collect()
    } else {
        vec![(None, (0..dim).collect())]
    };
    let blocks = blocks
        .into_iter()
        .map(|(particles, basis)| {
            let sub = h.submatrix(&basis);
            let eig = hermitian_eigen(&sub, basis.len())?;
            Ok(SpectrumBlock {
                particles,
                basis,
                energies: eig.values,
                vectors: eig.vectors,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Spectrum { dim, blocks })
}

/// Lowest eigenpair of a spectrum, optionally restricted to a
/// particle-number sector.
///
/// When the ground level is degenerate the representative is the first
/// eigenvector of the lowest level in block order, so the choice is
/// deterministic.
pub fn ground_state(spectrum: &Spectrum, sector: Option<usize>) -> Result<GroundStateResult> {
    let candidates: Vec<&SpectrumBlock> = match sector {
        Some(n) => {
            if !spectrum.conserves_number() {
                return Err(Error::contract(
                    "particle sector requested but the Hamiltonian does not conserve particle number",
                ));
            }
            let b = spectrum
                .blocks
                .iter()
                .filter(|b| b.particles == Some(n))
                .collect::<Vec<_>>();
            if b.is_empty() {
                return Err(Error::range(
                    "particle sector",
                    format!("{n} has no states"),
                ));
            }
            b
        }
        None => spectrum.blocks.iter().collect(),
    };
    let mut best: Option<(&SpectrumBlock, usize)> = None;
    for b in &candidates {
        if let Some(&e) = b.energies.first() {
            if best.is_none_or(|(bb, k)| e < bb.energies[k] - DEGENERACY_TOL) {
                best = Some((b, 0));
            }
        }
    }
    let (block, k) = best.ok_or_else(|| Error::contract("empty spectrum"))?;
    let energy = block.energies[k];
    let levels: Vec<f64> = {
        let mut v: Vec<f64> = candidates
            .iter()
            .flat_map(|b| b.energies.iter().copied())
            .collect();
        v.sort_by(f64::total_cmp);
        v
    };
    let degeneracy = levels
        .iter()
        .filter(|&&e| math::abs(e - energy) <= DEGENERACY_TOL)
        .count();
    let gap = levels
        .iter()
        .find(|&&e| e > energy + DEGENERACY_TOL)
        .map_or(0.0, |&e| e - energy);
    Ok(GroundStateResult {
        energy,
        state: block.embed(k, spectrum.dim),
        degeneracy,
        degenerate: degeneracy > 1,
        gap,
        sector,
    })
}

/// `<psi| O |psi>` as a complex number.
pub fn expectation(op: &PauliOperatorSum, psi: &[Complex64]) -> Result<Complex64> {
    let o_psi = apply_pauli_sum(op, psi)?;
    Ok(psi.iter().zip(&o_psi).map(|(a, b)| a.conj() * b).sum())
}

/// Real expectation value of an observable in the ground state.
///
/// Fails with a contract violation when the imaginary part exceeds 1e-10.
pub fn static_expectation(op: &PauliOperatorSum, gs: &GroundStateResult) -> Result<f64> {
    let v = expectation(op, &gs.state)?;
    if math::abs(v.im) > 1e-10 {
        return Err(Error::contract(format!(
            "expectation has imaginary part {:e}",
            v.im
        )));
    }
    Ok(v.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{encode_hamiltonian, encode_observable, HubbardSpec, ObservableSpec};
    use crate::oracle::realize_dense;

    fn solve(spec: &HubbardSpec) -> Spectrum {
        diagonalize(&realize_dense(&encode_hamiltonian(spec).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn single_site_doubly_occupied() {
        let spec = HubbardSpec::single_orbital(1, 1, 0.0, 2.0, 3.0);
        let gs = ground_state(&solve(&spec), None).unwrap();
        assert!((gs.energy + 4.0).abs() < 1e-12);
        assert!(!gs.degenerate);
        let n = encode_observable(&ObservableSpec::Density { site: 0 }, &spec).unwrap();
        let m = encode_observable(&ObservableSpec::Magnetization { site: 0 }, &spec).unwrap();
        assert!((static_expectation(&n, &gs).unwrap() - 2.0).abs() < 1e-12);
        assert!(static_expectation(&m, &gs).unwrap().abs() < 1e-12);
    }

    #[test]
    fn two_site_half_filling_energy() {
        let spec = HubbardSpec::single_orbital(2, 1, 1.0, 2.0, 1.0);
        let spectrum = solve(&spec);
        assert!(spectrum.conserves_number());
        let gs = ground_state(&spectrum, Some(2)).unwrap();
        let exact = 1.0 - libm::sqrt(5.0) - 2.0;
        assert!((gs.energy - exact).abs() < 1e-12);
        assert!(gs.gap > 0.0);
    }

    #[test]
    fn non_hermitian_is_rejected() {
        let mut data = alloc::vec![Complex64::new(0.0, 0.0); 4];
        data[1] = Complex64::new(1.0, 0.0);
        let d = DenseOperator::from_rows(1, data).unwrap();
        assert!(matches!(diagonalize(&d), Err(Error::Contract(_))));
    }
}
