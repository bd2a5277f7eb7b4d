use hubbard_core::utility::{
    aggregate_stage, guidance_savings, personnel_savings, reduction_years, stage23_annual_savings,
    stage45_annual_savings, superconductor_npv_years, DistributionSpec, EconomicConstants,
    ExistenceReading, Stage, UtilityDistribution,
};

const Z90: f64 = 1.2815515655446004;
const N: usize = 1_000_000;

/// Standard normal CDF through the complementary error function series of
/// Abramowitz and Stegun 7.1.26 (absolute error below 1.5e-7).
fn normal_cdf(x: f64) -> f64 {
    let z = x.abs() / std::f64::consts::SQRT_2;
    let t = 1.0 / (1.0 + 0.3275911 * z);
    let poly = t
        * (0.254829592
            + t * (-0.284496736 + t * (1.421413741 + t * (-1.453152027 + t * 1.061405429))));
    let erfc = poly * (-z * z).exp();
    if x >= 0.0 {
        1.0 - erfc / 2.0
    } else {
        erfc / 2.0
    }
}

fn within(actual: f64, expected: f64, rel: f64) -> bool {
    (actual - expected).abs() <= rel * expected.abs()
}

#[test]
fn beta_mean_within_sampling_error() {
    let (a, b) = (2.0, 8.0);
    let d = UtilityDistribution::new(DistributionSpec::Beta { a, b }.sample(N, 1).unwrap());
    let sd = (a * b / ((a + b) * (a + b) * (a + b + 1.0))).sqrt();
    assert!(
        (d.mean() - 0.2).abs() < 4.0 * sd / (N as f64).sqrt(),
        "{}",
        d.mean()
    );
    assert!((d.mean() - 0.2).abs() < 0.001);
}

#[test]
fn beta_one_four_cdf_is_closed_form() {
    let d = UtilityDistribution::new(
        DistributionSpec::Beta { a: 1.0, b: 4.0 }
            .sample(200_000, 2)
            .unwrap(),
    );
    let ks = (1..100)
        .map(|k| {
            let x = k as f64 / 100.0;
            (d.cdf(x) - (1.0 - (1.0 - x).powi(4))).abs()
        })
        .fold(0.0, f64::max);
    assert!(ks < 2.0 / (200_000f64).sqrt(), "KS distance {ks}");
}

#[test]
fn personnel_percentiles_follow_beta_quantiles() {
    let c = EconomicConstants::default();
    let d = UtilityDistribution::new(personnel_savings(&c, 3, N).unwrap());
    let base = c.personnel_base();
    for q in [0.1f64, 0.5, 0.9] {
        let analytic = base * (1.0 - (1.0 - q).powf(0.25));
        assert!(
            within(d.quantile(q), analytic, 0.01),
            "q{q}: {} vs {analytic}",
            d.quantile(q)
        );
    }
}

#[test]
fn lognormal_quantiles_follow_normal_quantiles() {
    let d = UtilityDistribution::new(
        DistributionSpec::LogNormal {
            mu: 3.5,
            sigma: 1.0,
        }
        .sample(N, 4)
        .unwrap(),
    );
    for (q, z) in [(0.1, -Z90), (0.5, 0.0), (0.9, Z90)] {
        let analytic = (3.5 + z).exp();
        assert!(
            within(d.quantile(q), analytic, 0.01),
            "q{q}: {} vs {analytic}",
            d.quantile(q)
        );
    }
}

#[test]
fn stage_means_match_expected_value() {
    let c = EconomicConstants::default();
    let pv = c.present_value_factor();
    assert!((pv - 5.0 / 0.05 * 0.95f64.powi(10) / 1000.0).abs() < 1e-15);
    let annual23 = c.hpc_pool * c.hpc_fraction.mean()
        + c.energy_hpc
        + c.carbon_hpc
        + c.personnel_base() * c.personnel_gain.mean();
    let annual45 = annual23 + c.experiment_pool * c.experiment_fraction.mean();
    for (stage, annual) in [(Stage::S23, annual23), (Stage::S45NoSc, annual45)] {
        let d = aggregate_stage(stage, &c, 5, N).unwrap();
        assert!(
            within(d.mean(), annual * pv, 0.003),
            "{}: {} vs {}",
            stage.name(),
            d.mean(),
            annual * pv
        );
    }
}

#[test]
fn spillover_only_adds_value() {
    let c = EconomicConstants::default();
    let without = aggregate_stage(Stage::S45NoSc, &c, 6, 50_000).unwrap();
    let with = aggregate_stage(Stage::S45WithSc, &c, 6, 50_000).unwrap();
    assert!(with
        .sorted()
        .iter()
        .zip(without.sorted())
        .all(|(w, o)| w >= o));
    assert!(with.mean() > without.mean());
}

#[test]
fn stages_share_draws() {
    let c = EconomicConstants::default();
    let s23 = stage23_annual_savings(&c, 7, 10_000).unwrap();
    let s45 = stage45_annual_savings(&c, 7, 10_000).unwrap();
    let g = guidance_savings(&c, 7, 10_000).unwrap();
    for ((a, b), g) in s23.iter().zip(&s45).zip(&g) {
        assert!((b - a - g).abs() < 1e-12);
    }
}

#[test]
fn runs_are_deterministic() {
    let c = EconomicConstants::default();
    for stage in Stage::ALL {
        let a = aggregate_stage(stage, &c, 8, 20_000).unwrap();
        let b = aggregate_stage(stage, &c, 8, 20_000).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, aggregate_stage(stage, &c, 9, 20_000).unwrap());
    }
}

#[test]
fn scalar_existence_zero_mass_is_discovery_before_solver() {
    let c = EconomicConstants::default();
    let d = UtilityDistribution::new(superconductor_npv_years(&c, 10, N).unwrap());
    let analytic = normal_cdf((c.solver_year_offset.ln() - 3.5) / 1.0);
    assert!(
        (d.zero_mass() - analytic).abs() < 0.002,
        "{} vs {analytic}",
        d.zero_mass()
    );
}

#[test]
fn bernoulli_existence_puts_a_fifth_at_zero() {
    let c = EconomicConstants {
        existence: ExistenceReading::Bernoulli,
        ..EconomicConstants::default()
    };
    let d = UtilityDistribution::new(superconductor_npv_years(&c, 11, N).unwrap());
    let no_sc = 1.0 - c.sc_exist_p;
    let early = normal_cdf((c.solver_year_offset.ln() - 3.5) / 1.0);
    let analytic = no_sc + c.sc_exist_p * early;
    assert!(d.zero_mass() >= 0.2);
    assert!(
        (d.zero_mass() - analytic).abs() < 0.002,
        "{} vs {analytic}",
        d.zero_mass()
    );
}

#[test]
fn reductions_vanish_before_the_solver() {
    let c = EconomicConstants::default();
    let r = reduction_years(&c, 12, 100_000).unwrap();
    assert!(r.iter().all(|&v| v >= 0.0));
    let d = UtilityDistribution::new(r);
    let early = normal_cdf((c.solver_year_offset.ln() - 3.5) / 1.0);
    assert!((d.zero_mass() - early).abs() < 0.005);
}

#[test]
fn histogram_and_cdf_agree() {
    let d = aggregate_stage(Stage::S23, &EconomicConstants::default(), 13, 20_000).unwrap();
    let h = d.histogram(40);
    assert_eq!(h.edges.len(), 41);
    assert_eq!(h.cdf.last().copied(), Some(1.0));
    for (edge, cdf) in h.edges[1..40].iter().zip(&h.cdf) {
        assert!((d.cdf(*edge) - cdf).abs() <= 1.0 / 20_000.0 + 1e-12);
    }
}
