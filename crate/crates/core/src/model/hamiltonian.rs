use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::fermion::{FermionOp, FermionTerm};
use super::spec::{HubbardSpec, Spin};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TermKind {
    Hopping,
    OnSite,
    ChemicalPotential,
    InterOrbital,
    Hund,
    PairHopping,
}

/// Fermionic terms of a Hamiltonian, each tagged with its origin.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianTerms {
    pub terms: Vec<FermionTerm>,
    pub kinds: Vec<TermKind>,
}

impl HamiltonianTerms {
    pub fn count(&self, kind: TermKind) -> usize {
        self.kinds.iter().filter(|&&k| k == kind).count()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, kind: TermKind, term: FermionTerm) {
        self.terms.push(term);
        self.kinds.push(kind);
    }
}

/// Enumerates the fermionic terms of
///
/// ```text
/// H = -sum_<ij>,l,l',s t_ll' c†_{i l s} c_{j l' s}
///     + U  sum_{i,l} n_{i l up} n_{i l down}
///     + U' sum_{i,l'<l} n_{i l} n_{i l'}
///     + J  sum_{i,l'<l} sum_{s,s'} c†_{i l s} c†_{i l' s'} c_{i l s'} c_{i l' s}
///     + J' sum_{i,l'!=l} c†_{i l up} c†_{i l down} c_{i l' down} c_{i l' up}
///     - mu sum_{i,l,s} n_{i l s}
/// ```
///
/// where the hopping sum runs over both directions of every bond, so
/// Hermitian conjugates appear as explicit terms. Zero couplings emit no
/// terms; multi-orbital terms only appear with more than one orbital.
pub fn build_hamiltonian(spec: &HubbardSpec) -> Result<HamiltonianTerms> {
    spec.validate()?;
    let mut out = HamiltonianTerms {
        terms: Vec::new(),
        kinds: Vec::new(),
    };
    let norb = spec.orbitals;

    for (i, j) in spec.edges() {
        for spin in Spin::BOTH {
            for a in 0..norb {
                for b in 0..norb {
                    let t = spec.hopping(a, b);
                    if t == 0.0 {
                        continue;
                    }
                    let p = spec.mode(i, a, spin);
                    let q = spec.mode(j, b, spin);
                    out.push(TermKind::Hopping, FermionTerm::hop(-t, p, q));
                    out.push(TermKind::Hopping, FermionTerm::hop(-t, q, p));
                }
            }
        }
    }

    for site in 0..spec.n_sites() {
        let m = |l: usize, s: Spin| spec.mode(site, l, s);
        if spec.u != 0.0 {
            for l in 0..norb {
                out.push(
                    TermKind::OnSite,
                    FermionTerm::density_density(spec.u, m(l, Spin::Up), m(l, Spin::Down)),
                );
            }
        }
        for l in 0..norb {
            for lp in 0..l {
                if spec.u_prime != 0.0 {
                    for s in Spin::BOTH {
                        for sp in Spin::BOTH {
                            out.push(
                                TermKind::InterOrbital,
                                FermionTerm::density_density(spec.u_prime, m(l, s), m(lp, sp)),
                            );
                        }
                    }
                }
                if spec.j != 0.0 {
                    for s in Spin::BOTH {
                        for sp in Spin::BOTH {
                            out.push(
                                TermKind::Hund,
                                FermionTerm::new(
                                    spec.j,
                                    alloc::vec![
                                        FermionOp::create(m(l, s)),
                                        FermionOp::create(m(lp, sp)),
                                        FermionOp::annihilate(m(l, sp)),
                                        FermionOp::annihilate(m(lp, s)),
                                    ],
                                ),
                            );
                        }
                    }
                }
            }
        }
        if spec.j_prime != 0.0 {
            for l in 0..norb {
                for lp in (0..norb).filter(|&lp| lp != l) {
                    out.push(
                        TermKind::PairHopping,
                        FermionTerm::new(
                            spec.j_prime,
                            alloc::vec![
                                FermionOp::create(m(l, Spin::Up)),
                                FermionOp::create(m(l, Spin::Down)),
                                FermionOp::annihilate(m(lp, Spin::Down)),
                                FermionOp::annihilate(m(lp, Spin::Up)),
                            ],
                        ),
                    );
                }
            }
        }
        if spec.mu != 0.0 {
            for s in Spin::BOTH {
                for l in 0..norb {
                    out.push(
                        TermKind::ChemicalPotential,
                        FermionTerm::number(-spec.mu, m(l, s)),
                    );
                }
            }
        }
    }
    Ok(out)
}
