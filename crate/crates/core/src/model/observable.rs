use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::fermion::{FermionOp, FermionTerm};
use super::jordan_wigner::{jordan_wigner, jordan_wigner_op};
use super::pauli::PauliOperatorSum;
use super::spec::{HubbardSpec, Spin};
use crate::{math, Error, Result};

/// Largest lattice for which the pair-gap operator is expanded in real space.
pub const PAIR_GAP_MAX_SITES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormFactor {
    /// `phi(k) = 1`
    S,
    /// `phi(k) = cos(kx) - cos(ky)`
    D,
}

impl FormFactor {
    pub fn eval(self, kx: f64, ky: f64) -> f64 {
        match self {
            FormFactor::S => 1.0,
            FormFactor::D => math::cos(kx) - math::cos(ky),
        }
    }
}

/// Observables on a lattice. Site observables sum over all orbitals of the
/// site; momentum-space operators act on orbital 0. Momentum indices
/// `(kx, ky)` denote `k = 2 pi (kx / nx, ky / ny)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ObservableSpec {
    Identity,
    /// `n_i = sum_s n_{i s}`
    Density {
        site: usize,
    },
    /// `m_i = n_{i up} - n_{i down}`
    Magnetization {
        site: usize,
    },
    /// `sum_i (-1)^(x_i + y_i) m_i`, a single lattice-wide operator.
    StaggeredMagnetization,
    /// `sum_k phi(k) c†_{k up} c†_{-k down} c_{-k down} c_{k up}`
    PairGap {
        form: FormFactor,
    },
    DensityCorrelation {
        i: usize,
        j: usize,
    },
    MagnetizationCorrelation {
        i: usize,
        j: usize,
    },
    /// Site-local annihilation operator `c_{site, spin}`.
    Annihilation {
        site: usize,
        spin: Spin,
    },
    /// The pair `(c†_k, c_k)` of the lesser Green's function
    /// `G<_k(t) = i <c†_k(t) c_k(0)>`.
    LesserGreen {
        kx: usize,
        ky: usize,
        spin: Spin,
    },
    /// An arbitrary pair `(A, B)` of fermionic operators.
    Generic {
        a: Vec<FermionTerm>,
        b: Vec<FermionTerm>,
    },
}

impl ObservableSpec {
    /// Factor multiplying `<A(t) B(0)>` in the conventional definition of the
    /// correlation function: `i` for the lesser Green's function, else 1.
    pub fn prefactor(&self) -> Complex64 {
        match self {
            ObservableSpec::LesserGreen { .. } => Complex64::new(0.0, 1.0),
            _ => Complex64::new(1.0, 0.0),
        }
    }

    fn validate(&self, spec: &HubbardSpec) -> Result<()> {
        let n = spec.n_sites();
        let site = |s: usize| {
            if s < n {
                Ok(())
            } else {
                Err(Error::range("site", format!("{s} not below {n}")))
            }
        };
        match self {
            ObservableSpec::Density { site: s }
            | ObservableSpec::Magnetization { site: s }
            | ObservableSpec::Annihilation { site: s, .. } => site(*s),
            ObservableSpec::DensityCorrelation { i, j }
            | ObservableSpec::MagnetizationCorrelation { i, j } => site(*i).and(site(*j)),
            ObservableSpec::LesserGreen { kx, ky, .. } => {
                if *kx >= spec.nx || *ky >= spec.ny {
                    Err(Error::range(
                        "momentum",
                        format!("({kx}, {ky}) outside the {}x{} grid", spec.nx, spec.ny),
                    ))
                } else {
                    Ok(())
                }
            }
            ObservableSpec::PairGap { .. } => {
                if n > PAIR_GAP_MAX_SITES {
                    Err(Error::ResourceLimit(format!(
                        "pair gap expansion limited to {PAIR_GAP_MAX_SITES} sites, lattice has {n}"
                    )))
                } else {
                    Ok(())
                }
            }
            ObservableSpec::Generic { a, b } => {
                let modes = spec.n_modes();
                match a.iter().chain(b).filter_map(FermionTerm::max_mode).max() {
                    Some(m) if m >= modes => {
                        Err(Error::range("mode", format!("{m} not below {modes}")))
                    }
                    _ => Ok(()),
                }
            }
            ObservableSpec::Identity | ObservableSpec::StaggeredMagnetization => Ok(()),
        }
    }
}

/// One projector `n_{i s} n_{j s'}` of a density or magnetization
/// correlator, with its weight in the sum.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectorPiece {
    pub spin_i: Spin,
    pub spin_j: Spin,
    pub weight: f64,
    pub op: PauliOperatorSum,
}

fn site_number_terms(spec: &HubbardSpec, site: usize, spin: Spin, coeff: f64) -> Vec<FermionTerm> {
    (0..spec.orbitals)
        .map(|l| FermionTerm::number(coeff, spec.mode(site, l, spin)))
        .collect()
}

fn site_pair_terms(
    spec: &HubbardSpec,
    i: usize,
    si: Spin,
    j: usize,
    sj: Spin,
    coeff: f64,
) -> Vec<FermionTerm> {
    let mut out = Vec::new();
    for a in 0..spec.orbitals {
        for b in 0..spec.orbitals {
            out.push(FermionTerm::density_density(
                coeff,
                spec.mode(i, a, si),
                spec.mode(j, b, sj),
            ));
        }
    }
    out
}

/// Splits `n_i n_j` (`magnetic = false`) or `m_i m_j` (`magnetic = true`)
/// into its four spin-resolved projectors.
pub fn correlation_projectors(
    spec: &HubbardSpec,
    i: usize,
    j: usize,
    magnetic: bool,
) -> Result<Vec<ProjectorPiece>> {
    spec.validate()?;
    ObservableSpec::DensityCorrelation { i, j }.validate(spec)?;
    let modes = spec.n_modes();
    let mut out = Vec::with_capacity(4);
    for si in Spin::BOTH {
        for sj in Spin::BOTH {
            let weight = if magnetic { si.sign() * sj.sign() } else { 1.0 };
            out.push(ProjectorPiece {
                spin_i: si,
                spin_j: sj,
                weight,
                op: jordan_wigner(modes, &site_pair_terms(spec, i, si, j, sj, 1.0)),
            });
        }
    }
    Ok(out)
}

/// Total particle number `sum_p n_p`.
pub fn number_operator(n_modes: usize) -> PauliOperatorSum {
    let terms: Vec<FermionTerm> = (0..n_modes).map(|p| FermionTerm::number(1.0, p)).collect();
    jordan_wigner(n_modes, &terms)
}

fn momentum_annihilator(spec: &HubbardSpec, kx: usize, ky: usize, spin: Spin) -> PauliOperatorSum {
    let n = spec.n_sites();
    let k = (
        2.0 * PI * kx as f64 / spec.nx as f64,
        2.0 * PI * ky as f64 / spec.ny as f64,
    );
    let norm = 1.0 / math::sqrt(n as f64);
    let mut acc = PauliOperatorSum::zero(spec.n_modes());
    for site in 0..n {
        let (x, y) = spec.site_coords(site);
        let phase = -(k.0 * x as f64 + k.1 * y as f64);
        let c = Complex64::new(math::cos(phase), math::sin(phase)) * norm;
        let op = jordan_wigner_op(
            spec.n_modes(),
            FermionOp::annihilate(spec.mode(site, 0, spin)),
        );
        acc = acc.add(&op.scale(c));
    }
    acc
}

fn pair_gap_terms(spec: &HubbardSpec, form: FormFactor) -> Vec<FermionTerm> {
    let (nx, ny) = (spec.nx, spec.ny);
    let n = spec.n_sites();
    // kernel[dy * nx + dx] = (1/N^2) sum_k phi(k) exp(i k . (dx, dy))
    let mut kernel = vec![Complex64::new(0.0, 0.0); n];
    for dy in 0..ny {
        for dx in 0..nx {
            let mut sum = Complex64::new(0.0, 0.0);
            for qy in 0..ny {
                for qx in 0..nx {
                    let kx = 2.0 * PI * qx as f64 / nx as f64;
                    let ky = 2.0 * PI * qy as f64 / ny as f64;
                    let arg = kx * dx as f64 + ky * dy as f64;
                    sum += Complex64::new(math::cos(arg), math::sin(arg)) * form.eval(kx, ky);
                }
            }
            kernel[dy * nx + dx] = sum / (n * n) as f64;
        }
    }
    let up = |s: usize| spec.mode(s, 0, Spin::Up);
    let down = |s: usize| spec.mode(s, 0, Spin::Down);
    let mut out = Vec::new();
    for a in 0..n {
        let (ax, ay) = spec.site_coords(a);
        for b in 0..n {
            let (bx, by) = spec.site_coords(b);
            for c in 0..n {
                let (cx, cy) = spec.site_coords(c);
                for d in 0..n {
                    let (dx, dy) = spec.site_coords(d);
                    let rx = (ax + cx + 2 * nx - bx - dx) % nx;
                    let ry = (ay + cy + 2 * ny - by - dy) % ny;
                    let coeff = kernel[ry * nx + rx];
                    if coeff.norm() < super::pauli::MERGE_EPS {
                        continue;
                    }
                    out.push(FermionTerm::new(
                        coeff,
                        vec![
                            FermionOp::create(up(a)),
                            FermionOp::create(down(b)),
                            FermionOp::annihilate(down(c)),
                            FermionOp::annihilate(up(d)),
                        ],
                    ));
                }
            }
        }
    }
    out
}

/// Jordan-Wigner encoding of an observable.
///
/// Static observables encode to themselves. For the correlation pairs the
/// result is the equal-time product: `c_k` itself for
/// [`ObservableSpec::LesserGreen`] is available from
/// [`ObservableSpec::correlation_operators`], while this returns `c†_k c_k`;
/// [`ObservableSpec::Generic`] returns `A B`.
pub fn encode_observable(obs: &ObservableSpec, spec: &HubbardSpec) -> Result<PauliOperatorSum> {
    spec.validate()?;
    obs.validate(spec)?;
    let modes = spec.n_modes();
    let op = match obs {
        ObservableSpec::Identity => PauliOperatorSum::identity(modes, 1.0),
        ObservableSpec::Density { site } => {
            let mut t = site_number_terms(spec, *site, Spin::Up, 1.0);
            t.extend(site_number_terms(spec, *site, Spin::Down, 1.0));
            jordan_wigner(modes, &t)
        }
        ObservableSpec::Magnetization { site } => {
            let mut t = site_number_terms(spec, *site, Spin::Up, 1.0);
            t.extend(site_number_terms(spec, *site, Spin::Down, -1.0));
            jordan_wigner(modes, &t)
        }
        ObservableSpec::StaggeredMagnetization => {
            let mut t = Vec::new();
            for site in 0..spec.n_sites() {
                let (x, y) = spec.site_coords(site);
                let stagger = if (x + y) % 2 == 0 { 1.0 } else { -1.0 };
                for s in Spin::BOTH {
                    t.extend(site_number_terms(spec, site, s, stagger * s.sign()));
                }
            }
            jordan_wigner(modes, &t)
        }
        ObservableSpec::PairGap { form } => jordan_wigner(modes, &pair_gap_terms(spec, *form)),
        ObservableSpec::DensityCorrelation { i, j }
        | ObservableSpec::MagnetizationCorrelation { i, j } => {
            let magnetic = matches!(obs, ObservableSpec::MagnetizationCorrelation { .. });
            correlation_projectors(spec, *i, *j, magnetic)?
                .iter()
                .fold(PauliOperatorSum::zero(modes), |acc, p| {
                    acc.add(&p.op.scale(p.weight))
                })
        }
        ObservableSpec::Annihilation { .. }
        | ObservableSpec::LesserGreen { .. }
        | ObservableSpec::Generic { .. } => {
            let (a, b) = obs.correlation_operators(spec)?;
            match obs {
                ObservableSpec::Annihilation { .. } => b,
                _ => a.mul(&b),
            }
        }
    };
    Ok(op)
}

impl ObservableSpec {
    /// The operators `(A, B)` of the correlation function `<A(t) B(0)>`.
    ///
    /// The lesser Green's function gives `(c†_k, c_k)`, a site annihilator
    /// gives `(c†, c)`, a generic pair gives `(A, B)`, and every static
    /// observable `O` gives the autocorrelation pair `(O, O)`.
    pub fn correlation_operators(
        &self,
        spec: &HubbardSpec,
    ) -> Result<(PauliOperatorSum, PauliOperatorSum)> {
        spec.validate()?;
        self.validate(spec)?;
        let modes = spec.n_modes();
        match self {
            ObservableSpec::Annihilation { site, spin } => {
                let c = jordan_wigner_op(modes, FermionOp::annihilate(spec.mode(*site, 0, *spin)));
                Ok((c.adjoint(), c))
            }
            ObservableSpec::LesserGreen { kx, ky, spin } => {
                let c = momentum_annihilator(spec, *kx, *ky, *spin);
                Ok((c.adjoint(), c))
            }
            ObservableSpec::Generic { a, b } => {
                Ok((jordan_wigner(modes, a), jordan_wigner(modes, b)))
            }
            _ => {
                let o = encode_observable(self, spec)?;
                Ok((o.clone(), o))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Pauli::{self, *};

    fn spec22() -> HubbardSpec {
        HubbardSpec::single_orbital(2, 2, 1.0, 2.0, 1.0)
    }

    fn pattern(n: usize, set: &[(usize, Pauli)]) -> Vec<Pauli> {
        let mut v = vec![I; n];
        for &(q, p) in set {
            v[q] = p;
        }
        v
    }

    #[test]
    fn density_has_three_strings() {
        let s = spec22();
        let n = encode_observable(&ObservableSpec::Density { site: 1 }, &s).unwrap();
        assert_eq!(n.len(), 3);
        assert_eq!(n.constant(), Complex64::new(1.0, 0.0));
        let up = s.mode(1, 0, Spin::Up);
        let down = s.mode(1, 0, Spin::Down);
        assert_eq!(n.coefficient(&pattern(8, &[(up, Z)])).re, -0.5);
        assert_eq!(n.coefficient(&pattern(8, &[(down, Z)])).re, -0.5);
    }

    #[test]
    fn magnetization_has_two_strings() {
        let s = spec22();
        let m = encode_observable(&ObservableSpec::Magnetization { site: 0 }, &s).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.term_count(), 2);
        assert_eq!(
            m.coefficient(&pattern(8, &[(s.mode(0, 0, Spin::Down), Z)]))
                .re,
            0.5
        );
        assert_eq!(
            m.coefficient(&pattern(8, &[(s.mode(0, 0, Spin::Up), Z)]))
                .re,
            -0.5
        );
    }

    #[test]
    fn annihilator_is_two_strings() {
        let one = HubbardSpec::single_orbital(1, 1, 1.0, 2.0, 1.0);
        let c = encode_observable(
            &ObservableSpec::Annihilation {
                site: 0,
                spin: Spin::Down,
            },
            &one,
        )
        .unwrap();
        assert_eq!(c.len(), 2);
        let (_, ck) = ObservableSpec::LesserGreen {
            kx: 0,
            ky: 0,
            spin: Spin::Up,
        }
        .correlation_operators(&one)
        .unwrap();
        assert_eq!(ck.len(), 2);
        let (_, ck) = ObservableSpec::LesserGreen {
            kx: 1,
            ky: 0,
            spin: Spin::Up,
        }
        .correlation_operators(&spec22())
        .unwrap();
        assert_eq!(ck.len(), 2 * 4);
    }

    #[test]
    fn momentum_out_of_grid_is_range_error() {
        let err = encode_observable(
            &ObservableSpec::LesserGreen {
                kx: 2,
                ky: 0,
                spin: Spin::Up,
            },
            &spec22(),
        );
        assert!(matches!(err, Err(Error::Range { .. })));
        let err = encode_observable(&ObservableSpec::Density { site: 4 }, &spec22());
        assert!(matches!(err, Err(Error::Range { .. })));
    }

    #[test]
    fn correlators_split_into_four_projectors() {
        let s = spec22();
        let pieces = correlation_projectors(&s, 0, 3, true).unwrap();
        assert_eq!(pieces.len(), 4);
        let weights: Vec<f64> = pieces.iter().map(|p| p.weight).collect();
        assert_eq!(weights, vec![1.0, -1.0, -1.0, 1.0]);
        for p in &pieces {
            // n n' = (1 - Z)(1 - Z')/4
            assert_eq!(p.op.len(), 4);
            let sq = p.op.mul(&p.op);
            assert_eq!(sq, p.op);
        }
    }

    #[test]
    fn observables_are_hermitian() {
        let s = spec22();
        let obs = [
            ObservableSpec::StaggeredMagnetization,
            ObservableSpec::PairGap {
                form: FormFactor::S,
            },
            ObservableSpec::PairGap {
                form: FormFactor::D,
            },
            ObservableSpec::DensityCorrelation { i: 0, j: 1 },
            ObservableSpec::MagnetizationCorrelation { i: 2, j: 2 },
            ObservableSpec::LesserGreen {
                kx: 1,
                ky: 1,
                spin: Spin::Down,
            },
        ];
        for o in &obs {
            assert!(
                encode_observable(o, &s).unwrap().is_hermitian(1e-12),
                "{o:?}"
            );
        }
    }

    #[test]
    fn pair_gap_respects_site_cap() {
        let big = HubbardSpec::single_orbital(5, 4, 1.0, 2.0, 1.0);
        assert!(matches!(
            encode_observable(
                &ObservableSpec::PairGap {
                    form: FormFactor::S
                },
                &big
            ),
            Err(Error::ResourceLimit(_))
        ));
    }
}
