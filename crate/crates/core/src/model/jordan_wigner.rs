use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::fermion::{FermionOp, FermionTerm};
use super::pauli::{Pauli, PauliOperatorSum, PauliString};

/// Jordan-Wigner image of a single ladder operator on `n_modes` qubits:
///
/// ```text
/// c_j  = Z_0 ... Z_{j-1} (X_j + i Y_j) / 2
/// c†_j = Z_0 ... Z_{j-1} (X_j - i Y_j) / 2
/// ```
///
/// An occupied mode corresponds to qubit state `|1>`.
///
/// # Panics
/// If `op.mode >= n_modes`.
pub fn jordan_wigner_op(n_modes: usize, op: FermionOp) -> PauliOperatorSum {
    PauliOperatorSum::from_strings(n_modes, op_strings(n_modes, op))
}

fn op_strings(n_modes: usize, op: FermionOp) -> [PauliString; 2] {
    assert!(op.mode < n_modes, "mode {} out of range", op.mode);
    let mut letters = vec![Pauli::I; n_modes];
    for l in &mut letters[..op.mode] {
        *l = Pauli::Z;
    }
    let mut x = letters.clone();
    x[op.mode] = Pauli::X;
    letters[op.mode] = Pauli::Y;
    let y_sign = if op.dagger { -0.5 } else { 0.5 };
    [
        PauliString {
            letters: x,
            coeff: Complex64::new(0.5, 0.0),
        },
        PauliString {
            letters,
            coeff: Complex64::new(0.0, y_sign),
        },
    ]
}

fn term_strings(n_modes: usize, term: &FermionTerm) -> Vec<PauliString> {
    let mut acc = vec![PauliString::identity(n_modes, term.coeff)];
    for &op in &term.ops {
        let factors = op_strings(n_modes, op);
        let mut next = Vec::with_capacity(acc.len() * 2);
        for a in &acc {
            for f in &factors {
                next.push(a.mul(f));
            }
        }
        acc = PauliOperatorSum::from_strings(n_modes, next)
            .terms()
            .to_vec();
    }
    acc
}

pub fn jordan_wigner_term(n_modes: usize, term: &FermionTerm) -> PauliOperatorSum {
    PauliOperatorSum::from_strings(n_modes, term_strings(n_modes, term))
}

/// Encodes a sum of fermionic products, merging like Pauli patterns.
///
/// # Panics
/// If any operator addresses a mode `>= n_modes`.
pub fn jordan_wigner(n_modes: usize, terms: &[FermionTerm]) -> PauliOperatorSum {
    PauliOperatorSum::from_strings(n_modes, terms.iter().flat_map(|t| term_strings(n_modes, t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Pauli::*;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn number_operator_image() {
        let n0 = jordan_wigner(1, &[FermionTerm::number(1.0, 0)]);
        assert_eq!(n0.len(), 2);
        assert_eq!(n0.coefficient(&[I]), re(0.5));
        assert_eq!(n0.coefficient(&[Z]), re(-0.5));
    }

    #[test]
    fn ladder_operator_has_two_strings() {
        let c = jordan_wigner_op(4, FermionOp::annihilate(2));
        assert_eq!(c.len(), 2);
        assert_eq!(c.coefficient(&[Z, Z, X, I]), re(0.5));
        assert_eq!(c.coefficient(&[Z, Z, Y, I]), Complex64::new(0.0, 0.5));
    }

    #[test]
    fn hopping_pair_gives_xx_plus_yy() {
        let h = jordan_wigner(
            2,
            &[FermionTerm::hop(-1.0, 0, 1), FermionTerm::hop(-1.0, 1, 0)],
        );
        assert_eq!(h.len(), 2);
        assert_eq!(h.coefficient(&[X, X]), re(-0.5));
        assert_eq!(h.coefficient(&[Y, Y]), re(-0.5));
    }

    #[test]
    fn anticommutation_holds_in_image() {
        let n = 3;
        for p in 0..n {
            for q in 0..n {
                let a = jordan_wigner_op(n, FermionOp::annihilate(p));
                let b = jordan_wigner_op(n, FermionOp::create(q));
                let anti = a.mul(&b).add(&b.mul(&a));
                if p == q {
                    assert_eq!(anti.len(), 1);
                    assert_eq!(anti.constant(), re(1.0));
                } else {
                    assert!(anti.is_empty());
                }
            }
        }
    }
}
