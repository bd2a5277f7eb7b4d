use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Current version of the problem-specification document layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Upper bound on lattice extents accepted by [`HubbardSpec::validate`].
const MAX_EXTENT: usize = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    Open,
    Periodic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    pub const BOTH: [Spin; 2] = [Spin::Up, Spin::Down];

    pub fn index(self) -> usize {
        match self {
            Spin::Up => 0,
            Spin::Down => 1,
        }
    }

    /// +1 for up, -1 for down.
    pub fn sign(self) -> f64 {
        match self {
            Spin::Up => 1.0,
            Spin::Down => -1.0,
        }
    }
}

/// A Fermi-Hubbard problem instance on an `nx` x `ny` square lattice.
///
/// The JSON form uses the keys `nx, ny, orbitals, V_nn, U, U_prime, J,
/// J_prime, mu, boundary`, plus the optional `schema_version` and
/// `orbital_hopping`. Unknown keys are rejected.
///
/// `orbital_hopping[l][l']` is the nearest-neighbour amplitude for hopping
/// between orbital `l'` on one site and orbital `l` on its neighbour. The
/// matrix must be symmetric. When absent, hopping is intra-orbital with
/// amplitude `V_nn`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HubbardSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema_version: Option<u32>,
    pub nx: usize,
    pub ny: usize,
    #[serde(default = "one")]
    pub orbitals: usize,
    #[serde(rename = "V_nn")]
    pub v_nn: f64,
    #[serde(rename = "U")]
    pub u: f64,
    #[serde(rename = "U_prime", default)]
    pub u_prime: f64,
    #[serde(rename = "J", default)]
    pub j: f64,
    #[serde(rename = "J_prime", default)]
    pub j_prime: f64,
    pub mu: f64,
    pub boundary: Boundary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbital_hopping: Option<Vec<Vec<f64>>>,
}

fn one() -> usize {
    1
}

impl HubbardSpec {
    /// Single-orbital instance with open boundaries.
    pub fn single_orbital(nx: usize, ny: usize, v_nn: f64, u: f64, mu: f64) -> Self {
        HubbardSpec {
            schema_version: None,
            nx,
            ny,
            orbitals: 1,
            v_nn,
            u,
            u_prime: 0.0,
            j: 0.0,
            j_prime: 0.0,
            mu,
            boundary: Boundary::Open,
            orbital_hopping: None,
        }
    }

    pub fn with_boundary(mut self, boundary: Boundary) -> Self {
        self.boundary = boundary;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(v) = self.schema_version {
            if v != SCHEMA_VERSION {
                return Err(Error::spec(format!(
                    "unsupported schema_version {v} (expected {SCHEMA_VERSION})"
                )));
            }
        }
        if self.nx == 0 || self.ny == 0 {
            return Err(Error::spec(format!(
                "lattice extents must be positive, got nx={} ny={}",
                self.nx, self.ny
            )));
        }
        if self.nx > MAX_EXTENT || self.ny > MAX_EXTENT {
            return Err(Error::spec(format!(
                "lattice extents must not exceed {MAX_EXTENT}"
            )));
        }
        if self.orbitals == 0 {
            return Err(Error::spec("orbitals must be positive"));
        }
        let couplings = [
            ("V_nn", self.v_nn),
            ("U", self.u),
            ("U_prime", self.u_prime),
            ("J", self.j),
            ("J_prime", self.j_prime),
            ("mu", self.mu),
        ];
        for (name, v) in couplings {
            if !v.is_finite() {
                return Err(Error::spec(format!("{name} must be finite")));
            }
        }
        if self.orbitals == 1 && (self.u_prime != 0.0 || self.j != 0.0 || self.j_prime != 0.0) {
            return Err(Error::spec(
                "U_prime, J and J_prime must be zero for a single orbital",
            ));
        }
        if let Some(h) = &self.orbital_hopping {
            if h.len() != self.orbitals || h.iter().any(|row| row.len() != self.orbitals) {
                return Err(Error::spec(format!(
                    "orbital_hopping must be a {0}x{0} matrix",
                    self.orbitals
                )));
            }
            if h.iter().flatten().any(|v| !v.is_finite()) {
                return Err(Error::spec("orbital_hopping entries must be finite"));
            }
            let symmetric = h
                .iter()
                .enumerate()
                .all(|(a, row)| row.iter().enumerate().all(|(b, v)| *v == h[b][a]));
            if !symmetric {
                return Err(Error::spec("orbital_hopping must be symmetric"));
            }
        }
        Ok(())
    }

    pub fn n_sites(&self) -> usize {
        self.nx * self.ny
    }

    /// Number of fermionic modes, `nx * ny * orbitals * 2`.
    pub fn n_modes(&self) -> usize {
        self.n_sites() * self.orbitals * 2
    }

    pub fn site_index(&self, x: usize, y: usize) -> usize {
        y * self.nx + x
    }

    pub fn site_coords(&self, site: usize) -> (usize, usize) {
        (site % self.nx, site / self.nx)
    }

    pub fn mode(&self, site: usize, orbital: usize, spin: Spin) -> usize {
        spin.index() * self.n_sites() * self.orbitals + site * self.orbitals + orbital
    }

    /// Nearest-neighbour hopping amplitude between orbitals `a` and `b`.
    pub fn hopping(&self, a: usize, b: usize) -> f64 {
        match &self.orbital_hopping {
            Some(h) => h[a][b],
            None if a == b => self.v_nn,
            None => 0.0,
        }
    }

    /// Nearest-neighbour bonds as `(i, j)` site pairs with `i < j`, sorted.
    ///
    /// With periodic boundaries a wrap-around bond is added along every
    /// direction of extent at least 2; for extent 2 it coincides with the
    /// interior bond and is therefore counted once.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let periodic = self.boundary == Boundary::Periodic;
        let mut set = BTreeSet::new();
        let mut push = |a: usize, b: usize| {
            if a != b {
                set.insert((a.min(b), a.max(b)));
            }
        };
        for y in 0..self.ny {
            for x in 0..self.nx {
                let s = self.site_index(x, y);
                if x + 1 < self.nx {
                    push(s, self.site_index(x + 1, y));
                } else if periodic {
                    push(s, self.site_index(0, y));
                }
                if y + 1 < self.ny {
                    push(s, self.site_index(x, y + 1));
                } else if periodic {
                    push(s, self.site_index(x, 0));
                }
            }
        }
        set.into_iter().collect()
    }
}
