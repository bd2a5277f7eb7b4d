use std::collections::BTreeMap;

use anyhow::Result;
use hubbard_core::model::{build_hamiltonian, jordan_wigner, HubbardSpec, PauliOperatorSum};
use serde::Serialize;

use crate::artifacts::OutputDir;
use crate::cli::{Context, EncodeArgs};

#[derive(Debug, Clone, Serialize)]
pub struct EncodeReport {
    pub spec: HubbardSpec,
    pub n_sites: usize,
    pub n_modes: usize,
    pub n_qubits: usize,
    pub fermion_terms: usize,
    /// Fermionic terms per kind of interaction.
    pub fermion_terms_by_kind: BTreeMap<String, usize>,
    /// Number of non-identity Pauli strings, `L`.
    pub n_terms: usize,
    pub alpha: f64,
    pub constant: f64,
    pub hamiltonian: PauliOperatorSum,
}

pub fn encode(ctx: &Context, args: &EncodeArgs, out: &mut OutputDir) -> Result<u64> {
    let spec = ctx.config.spec(args.spec.as_deref())?;
    let terms = build_hamiltonian(&spec)?;
    let mut by_kind = BTreeMap::new();
    for kind in &terms.kinds {
        let key = serde_json::to_value(kind)?
            .as_str()
            .unwrap_or_default()
            .to_string();
        *by_kind.entry(key).or_insert(0) += 1;
    }
    let h = jordan_wigner(spec.n_modes(), &terms.terms);
    let report = EncodeReport {
        n_sites: spec.n_sites(),
        n_modes: spec.n_modes(),
        n_qubits: h.n_qubits(),
        fermion_terms: terms.len(),
        fermion_terms_by_kind: by_kind,
        n_terms: h.term_count(),
        alpha: h.alpha(),
        constant: h.constant().re,
        hamiltonian: h,
        spec,
    };
    out.write_json("encode.json", &report)?;
    Ok(ctx.seed.unwrap_or(0))
}
