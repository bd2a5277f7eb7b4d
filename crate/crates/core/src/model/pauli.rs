use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::math;

/// Coefficients with smaller magnitude are dropped when like terms merge.
pub const MERGE_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// Product `self * rhs` as `(phase, letter)`.
    pub fn product(self, rhs: Pauli) -> (Complex64, Pauli) {
        use Pauli::*;
        let one = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        match (self, rhs) {
            (I, p) | (p, I) => (one, p),
            (X, X) | (Y, Y) | (Z, Z) => (one, I),
            (X, Y) => (i, Z),
            (Y, X) => (-i, Z),
            (Y, Z) => (i, X),
            (Z, Y) => (-i, X),
            (Z, X) => (i, Y),
            (X, Z) => (-i, Y),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// A weighted tensor product of single-qubit Paulis. `letters[q]` acts on
/// qubit `q`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PauliString {
    pub letters: Vec<Pauli>,
    pub coeff: Complex64,
}

impl PauliString {
    pub fn identity(n_qubits: usize, coeff: impl Into<Complex64>) -> Self {
        PauliString {
            letters: vec![Pauli::I; n_qubits],
            coeff: coeff.into(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.letters.iter().all(|&p| p == Pauli::I)
    }

    pub fn weight(&self) -> usize {
        self.letters.iter().filter(|&&p| p != Pauli::I).count()
    }

    /// Compact label such as `X0 Y1 Z3`; `I` for the identity.
    pub fn label(&self) -> String {
        let mut s = String::new();
        for (q, p) in self.letters.iter().enumerate() {
            if *p != Pauli::I {
                if !s.is_empty() {
                    s.push(' ');
                }
                s.push(p.as_char());
                s.push_str(&alloc::format!("{q}"));
            }
        }
        if s.is_empty() {
            s.push('I');
        }
        s
    }

    pub fn mul(&self, rhs: &PauliString) -> PauliString {
        let mut coeff = self.coeff * rhs.coeff;
        let letters = self
            .letters
            .iter()
            .zip(&rhs.letters)
            .map(|(&a, &b)| {
                let (phase, p) = a.product(b);
                coeff *= phase;
                p
            })
            .collect();
        PauliString { letters, coeff }
    }

    /// Whether the two strings commute as operators.
    pub fn commutes_with(&self, rhs: &PauliString) -> bool {
        let anti = self
            .letters
            .iter()
            .zip(&rhs.letters)
            .filter(|(&a, &b)| a != Pauli::I && b != Pauli::I && a != b)
            .count();
        anti % 2 == 0
    }
}

/// A deduplicated sum of Pauli strings on a fixed number of qubits.
///
/// Strings are kept sorted by letter pattern, so equal operators have equal
/// representations. The identity string, when present, carries the constant
/// offset and is excluded from [`alpha`](Self::alpha) and
/// [`term_count`](Self::term_count).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PauliOperatorSum {
    n_qubits: usize,
    terms: Vec<PauliString>,
    alpha: f64,
}

impl PauliOperatorSum {
    pub fn zero(n_qubits: usize) -> Self {
        PauliOperatorSum {
            n_qubits,
            terms: Vec::new(),
            alpha: 0.0,
        }
    }

    pub fn identity(n_qubits: usize, coeff: impl Into<Complex64>) -> Self {
        Self::from_strings(n_qubits, [PauliString::identity(n_qubits, coeff)])
    }

    /// Builds a sum from arbitrary strings, merging like patterns and
    /// dropping coefficients below [`MERGE_EPS`].
    ///
    /// # Panics
    /// If a string's length differs from `n_qubits`.
    pub fn from_strings(n_qubits: usize, strings: impl IntoIterator<Item = PauliString>) -> Self {
        let mut acc: BTreeMap<Vec<Pauli>, Complex64> = BTreeMap::new();
        for s in strings {
            assert_eq!(s.letters.len(), n_qubits, "Pauli string length mismatch");
            *acc.entry(s.letters).or_insert(Complex64::new(0.0, 0.0)) += s.coeff;
        }
        let terms: Vec<PauliString> = acc
            .into_iter()
            .filter(|(_, c)| c.norm() >= MERGE_EPS)
            .map(|(letters, coeff)| PauliString { letters, coeff })
            .collect();
        let alpha = one_norm(&terms);
        PauliOperatorSum {
            n_qubits,
            terms,
            alpha,
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn terms(&self) -> &[PauliString] {
        &self.terms
    }

    /// Number of strings including the identity.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of non-identity strings, `L`.
    pub fn term_count(&self) -> usize {
        self.terms.iter().filter(|t| !t.is_identity()).count()
    }

    /// Sum of coefficient magnitudes over non-identity strings.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Coefficient of the identity string.
    pub fn constant(&self) -> Complex64 {
        self.terms
            .iter()
            .find(|t| t.is_identity())
            .map_or(Complex64::new(0.0, 0.0), |t| t.coeff)
    }

    /// Coefficient of the given letter pattern, zero if absent.
    pub fn coefficient(&self, letters: &[Pauli]) -> Complex64 {
        self.terms
            .binary_search_by(|t| t.letters.as_slice().cmp(letters))
            .map_or(Complex64::new(0.0, 0.0), |k| self.terms[k].coeff)
    }

    pub fn add(&self, rhs: &PauliOperatorSum) -> PauliOperatorSum {
        assert_eq!(self.n_qubits, rhs.n_qubits, "qubit count mismatch");
        Self::from_strings(self.n_qubits, self.terms.iter().chain(&rhs.terms).cloned())
    }

    pub fn scale(&self, factor: impl Into<Complex64>) -> PauliOperatorSum {
        let f = factor.into();
        Self::from_strings(
            self.n_qubits,
            self.terms.iter().map(|t| PauliString {
                letters: t.letters.clone(),
                coeff: t.coeff * f,
            }),
        )
    }

    pub fn mul(&self, rhs: &PauliOperatorSum) -> PauliOperatorSum {
        assert_eq!(self.n_qubits, rhs.n_qubits, "qubit count mismatch");
        let mut out = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                out.push(a.mul(b));
            }
        }
        Self::from_strings(self.n_qubits, out)
    }

    pub fn adjoint(&self) -> PauliOperatorSum {
        PauliOperatorSum {
            n_qubits: self.n_qubits,
            terms: self
                .terms
                .iter()
                .map(|t| PauliString {
                    letters: t.letters.clone(),
                    coeff: t.coeff.conj(),
                })
                .collect(),
            alpha: self.alpha,
        }
    }

    /// Largest imaginary coefficient part. Pauli strings are Hermitian and
    /// linearly independent, so the sum is self-adjoint iff this is zero.
    pub fn max_imaginary(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| math::abs(t.coeff.im))
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_imaginary() <= tol
    }

    /// `self * rhs - rhs * self`
    pub fn commutator(&self, rhs: &PauliOperatorSum) -> PauliOperatorSum {
        let mut out = Vec::new();
        for a in &self.terms {
            for b in &rhs.terms {
                if !a.commutes_with(b) {
                    let mut p = a.mul(b);
                    p.coeff *= 2.0;
                    out.push(p);
                }
            }
        }
        Self::from_strings(self.n_qubits, out)
    }

    /// Applies a qubit relabelling: qubit `q` of `self` becomes qubit
    /// `perm[q]` of the result.
    pub fn permute_qubits(&self, perm: &[usize]) -> PauliOperatorSum {
        assert_eq!(perm.len(), self.n_qubits, "permutation length mismatch");
        Self::from_strings(
            self.n_qubits,
            self.terms.iter().map(|t| {
                let mut letters = vec![Pauli::I; self.n_qubits];
                for (q, &p) in t.letters.iter().enumerate() {
                    letters[perm[q]] = p;
                }
                PauliString {
                    letters,
                    coeff: t.coeff,
                }
            }),
        )
    }
}

fn one_norm(terms: &[PauliString]) -> f64 {
    math::compensated_sum(
        terms
            .iter()
            .filter(|t| !t.is_identity())
            .map(|t| t.coeff.norm()),
    )
}

impl fmt::Display for PauliOperatorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}{:+}i) {}", t.coeff.re, t.coeff.im, t.label())?;
        }
        Ok(())
    }
}
