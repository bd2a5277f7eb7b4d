use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::pauli::MERGE_EPS;

/// A single creation (`dagger = true`) or annihilation operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FermionOp {
    pub mode: usize,
    pub dagger: bool,
}

impl FermionOp {
    pub fn create(mode: usize) -> Self {
        FermionOp { mode, dagger: true }
    }

    pub fn annihilate(mode: usize) -> Self {
        FermionOp {
            mode,
            dagger: false,
        }
    }

    pub fn adjoint(self) -> Self {
        FermionOp {
            mode: self.mode,
            dagger: !self.dagger,
        }
    }

    /// Sort key of the normal-ordered form: creators first with descending
    /// modes, then annihilators with descending modes.
    fn rank(self) -> (u8, core::cmp::Reverse<usize>) {
        (u8::from(!self.dagger), core::cmp::Reverse(self.mode))
    }
}

/// A product of fermionic operators, applied right to left, times a
/// coefficient.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FermionTerm {
    pub ops: Vec<FermionOp>,
    pub coeff: Complex64,
}

impl FermionTerm {
    pub fn new(coeff: impl Into<Complex64>, ops: Vec<FermionOp>) -> Self {
        FermionTerm {
            ops,
            coeff: coeff.into(),
        }
    }

    /// `coeff * c†_p c_q`
    pub fn hop(coeff: impl Into<Complex64>, p: usize, q: usize) -> Self {
        Self::new(coeff, vec![FermionOp::create(p), FermionOp::annihilate(q)])
    }

    /// `coeff * n_p`
    pub fn number(coeff: impl Into<Complex64>, p: usize) -> Self {
        Self::hop(coeff, p, p)
    }

    /// `coeff * n_p n_q`
    pub fn density_density(coeff: impl Into<Complex64>, p: usize, q: usize) -> Self {
        Self::new(
            coeff,
            vec![
                FermionOp::create(p),
                FermionOp::annihilate(p),
                FermionOp::create(q),
                FermionOp::annihilate(q),
            ],
        )
    }

    pub fn adjoint(&self) -> Self {
        FermionTerm {
            ops: self.ops.iter().rev().map(|op| op.adjoint()).collect(),
            coeff: self.coeff.conj(),
        }
    }

    pub fn max_mode(&self) -> Option<usize> {
        self.ops.iter().map(|op| op.mode).max()
    }
}

/// Rewrites a sum of fermionic products in normal order using the canonical
/// anticommutation relations, merging like products.
///
/// The result is unique for a given operator: products are sorted with
/// creators first (descending mode) then annihilators (descending mode),
/// products containing a repeated operator vanish, and coefficients below
/// [`MERGE_EPS`] in magnitude are dropped. Output is sorted by product.
pub fn normal_order(terms: &[FermionTerm]) -> Vec<FermionTerm> {
    let mut acc: BTreeMap<Vec<FermionOp>, Complex64> = BTreeMap::new();
    let mut stack: Vec<(Vec<FermionOp>, Complex64)> =
        terms.iter().map(|t| (t.ops.clone(), t.coeff)).collect();

    while let Some((mut ops, coeff)) = stack.pop() {
        let mut sign = 1.0;
        let mut sorted = true;
        // Bubble sort; each swap of distinct neighbours flips the sign and,
        // for c_i c†_i, spawns the contracted product.
        'outer: for pass in 0..ops.len() {
            let mut swapped = false;
            for k in 0..ops.len().saturating_sub(1 + pass) {
                let (a, b) = (ops[k], ops[k + 1]);
                if a.rank() > b.rank() {
                    if a.mode == b.mode && !a.dagger && b.dagger {
                        let mut contracted = ops[..k].to_vec();
                        contracted.extend_from_slice(&ops[k + 2..]);
                        stack.push((contracted, coeff * sign));
                    }
                    ops.swap(k, k + 1);
                    sign = -sign;
                    swapped = true;
                } else if a == b {
                    sorted = false;
                    break 'outer;
                }
            }
            if !swapped {
                break;
            }
        }
        if !sorted || ops.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        *acc.entry(ops).or_insert(Complex64::new(0.0, 0.0)) += coeff * sign;
    }

    acc.into_iter()
        .filter(|(_, c)| c.norm() >= MERGE_EPS)
        .map(|(ops, coeff)| FermionTerm { ops, coeff })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn anticommutator_contracts() {
        // c_0 c†_0 = 1 - c†_0 c_0
        let t = FermionTerm::new(1.0, vec![FermionOp::annihilate(0), FermionOp::create(0)]);
        let n = normal_order(&[t]);
        assert_eq!(n.len(), 2);
        assert!(n[0].ops.is_empty());
        assert_eq!(n[0].coeff, c(1.0));
        assert_eq!(
            n[1].ops,
            vec![FermionOp::create(0), FermionOp::annihilate(0)]
        );
        assert_eq!(n[1].coeff, c(-1.0));
    }

    #[test]
    fn repeated_operator_vanishes() {
        let t = FermionTerm::new(1.0, vec![FermionOp::create(3), FermionOp::create(3)]);
        assert!(normal_order(&[t]).is_empty());
    }

    #[test]
    fn hermitian_conjugate_pair_is_unique() {
        let a = FermionTerm::hop(1.0, 0, 1);
        let b = FermionTerm::new(-1.0, vec![FermionOp::annihilate(1), FermionOp::create(0)]);
        // c†_0 c_1 + (-c_1 c†_0) = 2 c†_0 c_1
        let n = normal_order(&[a, b]);
        assert_eq!(n.len(), 1);
        assert_eq!(n[0].coeff, c(2.0));
    }

    #[test]
    fn adjoint_reverses_and_conjugates() {
        let t = FermionTerm::new(
            Complex64::new(0.0, 2.0),
            vec![FermionOp::create(2), FermionOp::annihilate(5)],
        );
        let a = t.adjoint();
        assert_eq!(a.ops, vec![FermionOp::create(5), FermionOp::annihilate(2)]);
        assert_eq!(a.coeff, Complex64::new(0.0, -2.0));
    }
}
