use anyhow::Result;
use hubbard_core::utility::{
    reduction_years, superconductor_npv_years, transmission_spillover, EconomicConstants,
    UtilityDistribution, UtilitySummary,
};
use serde::Serialize;

use crate::artifacts::OutputDir;
use crate::cli::{Context, UtilityArgs};
use crate::parallel;

#[derive(Debug, Clone, Serialize)]
pub struct StageSummary {
    pub stage: String,
    /// Present value in $B.
    pub summary: UtilitySummary,
}

#[derive(Debug, Clone, Serialize)]
pub struct UtilityReport {
    pub seed: u64,
    pub samples: usize,
    pub constants: EconomicConstants,
    pub present_value_factor: f64,
    pub stages: Vec<StageSummary>,
    /// Present value of an earlier superconductor, in years of annual
    /// transmission savings.
    pub superconductor_npv_years: UtilitySummary,
    pub reduction_years: UtilitySummary,
    /// Transmission spillover in $B.
    pub transmission: UtilitySummary,
}

#[derive(Serialize)]
struct CdfRow<'a> {
    stage: &'a str,
    value: f64,
    cdf: f64,
}

#[derive(Serialize)]
struct PdfRow<'a> {
    stage: &'a str,
    lo: f64,
    hi: f64,
    density: f64,
}

pub fn utility(ctx: &Context, args: &UtilityArgs, out: &mut OutputDir) -> Result<u64> {
    let c = ctx.config.economics;
    c.validate()?;
    let seed = ctx.seed.unwrap_or(0);
    let n = args.samples.max(1);
    let stages = parallel::all_stages(&c, seed, n)?;
    let npv = UtilityDistribution::new(superconductor_npv_years(&c, seed, n)?);
    let reduction = UtilityDistribution::new(reduction_years(&c, seed, n)?);
    let transmission = transmission_spillover(&c, seed, n)?;

    let mut cdf_rows = Vec::new();
    let mut pdf_rows = Vec::new();
    for (stage, dist) in &stages {
        let h = dist.histogram(args.bins);
        for (i, (&density, &cdf)) in h.density.iter().zip(&h.cdf).enumerate() {
            pdf_rows.push(PdfRow {
                stage: stage.name(),
                lo: h.edges[i],
                hi: h.edges[i + 1],
                density,
            });
            cdf_rows.push(CdfRow {
                stage: stage.name(),
                value: h.edges[i + 1],
                cdf,
            });
        }
    }
    out.write_csv("utility_pdf.csv", &pdf_rows)?;
    out.write_csv("utility_cdf.csv", &cdf_rows)?;

    let report = UtilityReport {
        seed,
        samples: n,
        constants: c,
        present_value_factor: c.present_value_factor(),
        stages: stages
            .iter()
            .map(|(s, d)| StageSummary {
                stage: s.name().to_string(),
                summary: d.summary(),
            })
            .collect(),
        superconductor_npv_years: npv.summary(),
        reduction_years: reduction.summary(),
        transmission: transmission.summary(),
    };
    out.write_json("utility.json", &report)?;
    Ok(seed)
}
