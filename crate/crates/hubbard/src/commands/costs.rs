use anyhow::{Context as _, Result};
use hubbard_core::logical::{logical_cost_report, LogicalCostInputs, LogicalCostReport};
use hubbard_core::physical::{physical_estimate, PhysicalEstimate, SweepRow};
use serde::Serialize;

use crate::artifacts::OutputDir;
use crate::cli::{Context, CostsArgs};
use crate::parallel;

#[derive(Debug, Clone, Serialize)]
pub struct CostsReport {
    pub logical: LogicalCostReport,
    pub physical: PhysicalEstimate,
}

#[derive(Serialize)]
struct LogicalRow {
    lattice: String,
    n_qubits: usize,
    n_terms: usize,
    alpha: f64,
    qsp_degree: u64,
    t_per_u: u64,
    t_per_circuit: u64,
    shots: u64,
    total_t: u64,
}

fn inputs(ctx: &Context, args: &CostsArgs) -> LogicalCostInputs {
    let mut inputs = ctx.config.logical;
    if let Some(e) = args.epsilon {
        inputs.epsilon = e;
    }
    if let Some(d) = args.delta {
        inputs.delta = d;
    }
    if let Some(t) = args.time {
        inputs.time = t;
    }
    if args.shots_formula {
        inputs.shots_reference = None;
    } else if let Some(s) = args.shots {
        inputs.shots_reference = Some(s);
    }
    if args.gamma.is_some() {
        inputs.gamma = args.gamma;
        inputs.gap = args.gap;
    }
    inputs
}

pub fn costs(ctx: &Context, args: &CostsArgs, out: &mut OutputDir) -> Result<u64> {
    let spec = ctx.config.spec(args.spec.as_deref())?;
    let inputs = inputs(ctx, args);
    let arch = &ctx.config.architecture;
    let logical = logical_cost_report(&spec, &inputs)?;
    let label = format!("{}x{}", spec.nx, spec.ny);
    let physical = physical_estimate(&logical, &label, arch)
        .with_context(|| format!("physical estimate of {label}"))?;
    if logical.shots_discrepancy {
        eprintln!(
            "note: using {} shots; the iterate bound gives {}",
            logical.dynamic.shots, logical.dynamic.shots_formula
        );
    }
    out.write_json("costs.json", &CostsReport { logical, physical })?;

    if args.sweep_max >= 2 {
        let sizes: Vec<(usize, usize)> = (2..=args.sweep_max).map(|n| (n, n)).collect();
        let make = |nx: usize, ny: usize| {
            let mut s = spec.clone();
            s.nx = nx;
            s.ny = ny;
            s
        };
        let results =
            parallel::lattice_sweep(&sizes, make, &inputs, arch).context("lattice sweep")?;
        let physical: Vec<SweepRow> = results.iter().map(|(_, e)| e.row()).collect();
        let logical: Vec<LogicalRow> = results
            .iter()
            .map(|(r, e)| LogicalRow {
                lattice: e.lattice.clone(),
                n_qubits: r.n_qubits,
                n_terms: r.n_terms,
                alpha: r.alpha,
                qsp_degree: r.dynamic_t.qsp_degree,
                t_per_u: r.dynamic_t.t_per_u,
                t_per_circuit: r.dynamic_t.per_circuit,
                shots: r.dynamic_t.shots,
                total_t: r.dynamic_t.total,
            })
            .collect();
        out.write_csv("logical_sweep.csv", &logical)?;
        out.write_csv("physical_sweep.csv", &physical)?;
    }
    Ok(ctx.seed.unwrap_or(0))
}
