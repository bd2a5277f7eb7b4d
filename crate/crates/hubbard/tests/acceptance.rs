use std::time::Instant;

use hubbard::commands::resolution_scenarios;
use hubbard::parallel;
use hubbard_core::logical::{logical_cost_report, LogicalCostInputs};
use hubbard_core::model::{
    build_hamiltonian, encode_hamiltonian, jordan_wigner, number_operator, Boundary, FermionOp,
    FermionTerm, HubbardSpec, ObservableSpec, Spin,
};
use hubbard_core::oracle::{diagonalize, dynamic_correlation, ground_state, realize_dense};
use hubbard_core::physical::{default_sweep_sizes, lattice_sweep, ArchitectureConfig};
use hubbard_core::signal::{monotonicity, spectrum_peaks, PeakPolicy, SweepConfig};
use hubbard_core::utility::{
    aggregate_stage, personnel_savings, superconductor_npv_years, DistributionSpec,
    EconomicConstants, ExistenceReading, Stage, UtilityDistribution,
};

const SAMPLES: usize = 1_000_000;
const SEED: u64 = 0;

struct Report {
    failed: Vec<usize>,
}

impl Report {
    fn record(&mut self, id: usize, title: &str, start: Instant, checks: &[(String, bool)]) {
        let pass = checks.iter().all(|c| c.1);
        println!(
            "{} criterion {id}: {title} ({:.1} s)",
            if pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
        for (what, ok) in checks {
            println!("    [{}] {what}", if *ok { "ok" } else { "x" });
        }
        if !pass {
            self.failed.push(id);
        }
    }
}

fn rel(actual: f64, expected: f64, tol: f64) -> (String, bool) {
    let ok = if expected == 0.0 {
        actual.abs() <= 1e-12
    } else {
        (actual - expected).abs() <= tol * expected.abs()
    };
    let text = if expected != 0.0 && expected.abs() < 1e-3 {
        format!("{actual:.5e} vs {expected:e} within {}%", 100.0 * tol)
    } else {
        format!("{actual:.6} vs {expected} within {}%", 100.0 * tol)
    };
    (text, ok)
}

fn labeled(label: &str, c: (String, bool)) -> (String, bool) {
    (format!("{label}: {}", c.0), c.1)
}

fn circuit_chain(r: &mut Report) {
    let start = Instant::now();
    let spec = HubbardSpec::single_orbital(2, 2, 1.0, 2.0, 1.0);
    let report = logical_cost_report(&spec, &LogicalCostInputs::default()).unwrap();
    let d = &report.dynamic;
    let p10 = (d.p_qsp * 1e10).round() / 1e10;
    r.record(
        1,
        "circuit-parameter chain",
        start,
        &[
            (
                format!("U(t) per circuit {} vs 156", d.u_t_per_circuit),
                d.u_t_per_circuit == 156,
            ),
            labeled(
                "per-circuit failure",
                rel(d.per_circuit_failure_exact, 1.4903e-6, 1e-4),
            ),
            (
                format!("p_qsp {:.12} rounds to {p10:.10} vs 0.9999999904", d.p_qsp),
                (p10 - 0.9999999904).abs() <= 1.5e-10,
            ),
            labeled("epsilon_qsp", rel(d.epsilon_qsp, 4.81e-9, 0.005)),
        ],
    );
}

fn signal_resolution(r: &mut Report) {
    let start = Instant::now();
    let s = resolution_scenarios(SEED, 100).unwrap().summaries;
    let long = s
        .iter()
        .find(|x| x.t_max == 700.0 && x.epsilon == 0.01)
        .unwrap();
    let short = s
        .iter()
        .find(|x| x.t_max == 100.0 && x.epsilon == 0.5)
        .unwrap();
    r.record(
        2,
        "signal resolution",
        start,
        &[
            (
                format!(
                    "T=700 eps=0.01: all six lines within 0.01 in {}/{}",
                    long.all_recovered, long.realizations
                ),
                long.all_recovered == long.realizations,
            ),
            (
                format!(
                    "T=100 eps=0.5: fewer than six peaks in {}/{}",
                    short.fewer_peaks, short.realizations
                ),
                short.fewer_peaks >= 90,
            ),
        ],
    );
}

fn sweep_monotonicity(r: &mut Report) {
    let start = Instant::now();
    let config = SweepConfig::default();
    let table = parallel::resolution_sweep(&config).unwrap();
    let raw = monotonicity(&table, 0.0);
    let sigma = monotonicity(&table, 3.0);
    println!(
        "INFO criterion 3: beyond three standard errors {} of {} pairs violate ({:.2}%)",
        sigma.violations(),
        sigma.pairs(),
        100.0 * sigma.violation_fraction()
    );
    r.record(
        3,
        "sweep monotonicity",
        start,
        &[(
            format!(
                "{} T_max and {} epsilon violations over {} pairs: {:.2}% vs at most 5%",
                raw.t_violations,
                raw.epsilon_violations,
                raw.pairs(),
                100.0 * raw.violation_fraction()
            ),
            raw.violation_fraction() <= 0.05,
        )],
    );
}

fn oracle_closure(r: &mut Report) {
    let start = Instant::now();
    let spec = HubbardSpec::single_orbital(2, 1, 1.0, 2.0, 1.0);
    let spectrum =
        diagonalize(&realize_dense(&encode_hamiltonian(&spec).unwrap()).unwrap()).unwrap();
    let gs = ground_state(&spectrum, None).unwrap();
    let exact = 1.0 - 5f64.sqrt() - 2.0;
    let (a, b) = ObservableSpec::LesserGreen {
        kx: 0,
        ky: 0,
        spin: Spin::Up,
    }
    .correlation_operators(&spec)
    .unwrap();
    let dt = 0.2;
    let trace = dynamic_correlation(&spectrum, &a, &b, &gs, dt, 200.0).unwrap();
    let peaks = spectrum_peaks(&trace.values, dt, &PeakPolicy::default());
    let strong: Vec<f64> = trace
        .components
        .iter()
        .filter(|c| c.weight.norm() > 1e-3)
        .map(|c| c.frequency)
        .collect();
    let bin = peaks.bin_width;
    let matched = peaks
        .peaks
        .iter()
        .filter(|p| strong.iter().any(|f| (f - p.frequency).abs() <= bin))
        .count();
    r.record(
        4,
        "oracle closure",
        start,
        &[
            (
                format!("E0 {:.12} vs {exact:.12} within 1e-9", gs.energy),
                (gs.energy - exact).abs() <= 1e-9,
            ),
            (
                format!(
                    "{matched}/{} peaks within one bin of an eigenvalue difference",
                    peaks.peaks.len()
                ),
                !peaks.peaks.is_empty() && matched == peaks.peaks.len(),
            ),
        ],
    );
}

fn utility_closures(r: &mut Report) {
    let start = Instant::now();
    let beta = UtilityDistribution::new(
        DistributionSpec::Beta { a: 2.0, b: 8.0 }
            .sample(SAMPLES, SEED)
            .unwrap(),
    );
    let c = EconomicConstants::default();
    let personnel = UtilityDistribution::new(personnel_savings(&c, SEED, SAMPLES).unwrap());
    let lognormal = UtilityDistribution::new(
        DistributionSpec::LogNormal {
            mu: 3.5,
            sigma: 1.0,
        }
        .sample(SAMPLES, SEED)
        .unwrap(),
    );
    let mut checks = vec![(
        format!("Beta(2,8) mean {:.5} vs 0.20 within 0.001", beta.mean()),
        (beta.mean() - 0.2).abs() <= 0.001,
    )];
    for (q, expected) in [(0.1, 0.6), (0.5, 3.5), (0.9, 9.7)] {
        checks.push(labeled(
            &format!("personnel q{:.0} M$", 100.0 * q),
            rel(personnel.quantile(q), expected, 0.03),
        ));
    }
    for (q, expected) in [(0.1, 9.1), (0.5, 33.1), (0.9, 119.3)] {
        checks.push(labeled(
            &format!("LogNormal(3.5,1) q{:.0}", 100.0 * q),
            rel(lognormal.quantile(q), expected, 0.01),
        ));
    }
    r.record(5, "utility analytic closures", start, &checks);
}

fn utility_headlines(r: &mut Report) {
    let start = Instant::now();
    let c = EconomicConstants::default();
    let mut checks = Vec::new();
    for (stage, expected) in [
        (Stage::S23, 7.3),
        (Stage::S45NoSc, 7.8),
        (Stage::S45WithSc, 22.1),
    ] {
        let d = aggregate_stage(stage, &c, SEED, SAMPLES).unwrap();
        checks.push(labeled(
            &format!("{} mean $B", stage.name()),
            rel(d.mean(), expected, 0.10),
        ));
    }
    let npv = UtilityDistribution::new(superconductor_npv_years(&c, SEED, SAMPLES).unwrap());
    for (q, expected) in [(0.1, 0.0), (0.5, 2.2), (0.9, 5.2)] {
        checks.push(labeled(
            &format!("NPV-years q{:.0}", 100.0 * q),
            rel(npv.quantile(q), expected, 0.15),
        ));
    }
    checks.push((
        format!(
            "NPV-years zero mass {:.4} vs at least 0.20",
            npv.zero_mass()
        ),
        npv.zero_mass() >= 0.20,
    ));

    let alt = EconomicConstants {
        existence: ExistenceReading::Bernoulli,
        ..c
    };
    let npv_alt = UtilityDistribution::new(superconductor_npv_years(&alt, SEED, SAMPLES).unwrap());
    let with_sc = aggregate_stage(Stage::S45WithSc, &alt, SEED, SAMPLES).unwrap();
    println!(
        "INFO criterion 6: Bernoulli existence reading gives NPV-years q10/q50/q90 {:.3}/{:.3}/{:.3}, zero mass {:.4}, s45_with_sc mean {:.3} $B",
        npv_alt.quantile(0.1),
        npv_alt.quantile(0.5),
        npv_alt.quantile(0.9),
        npv_alt.zero_mass(),
        with_sc.mean()
    );
    r.record(6, "utility headline means", start, &checks);
}

fn physical_trends(r: &mut Report) {
    let start = Instant::now();
    let rows = lattice_sweep(
        &default_sweep_sizes(),
        |nx, ny| HubbardSpec::single_orbital(nx, ny, 1.0, 2.0, 1.0),
        &LogicalCostInputs::default(),
        &ArchitectureConfig::default(),
    )
    .unwrap();
    let worst_share = rows
        .iter()
        .map(|e| (e.runtime.share_sum() - 1.0).abs())
        .fold(0.0, f64::max);
    let runtime: Vec<f64> = rows.iter().map(|e| e.runtime.total_seconds).collect();
    let bus: Vec<u64> = rows.iter().map(|e| e.layout.bus_qubits).collect();
    r.record(
        7,
        "physical-model properties",
        start,
        &[
            (
                format!("runtime shares sum to 1 within {worst_share:.2e}"),
                worst_share <= 1e-9,
            ),
            (
                format!("runtime non-decreasing 2x2..7x7: {runtime:.0?} s"),
                runtime.windows(2).all(|w| w[1] >= w[0]),
            ),
            (
                format!("bus qubits non-decreasing 2x2..7x7: {bus:?}"),
                bus.windows(2).all(|w| w[1] >= w[0]),
            ),
        ],
    );
}

struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    fn coupling(&mut self) -> f64 {
        (self.next() % 6001) as f64 / 1000.0 - 3.0
    }
}

fn small_specs(max_modes: usize, rng: &mut Lcg) -> Vec<HubbardSpec> {
    let mut specs = Vec::new();
    for nx in 1..=4 {
        for ny in 1..=2 {
            for orbitals in 1..=2 {
                if 2 * nx * ny * orbitals > max_modes {
                    continue;
                }
                for boundary in [Boundary::Open, Boundary::Periodic] {
                    let v = rng.coupling();
                    let mut s =
                        HubbardSpec::single_orbital(nx, ny, v, rng.coupling(), rng.coupling())
                            .with_boundary(boundary);
                    if orbitals == 2 {
                        s.orbitals = 2;
                        s.u_prime = rng.coupling();
                        s.j = rng.coupling();
                        s.j_prime = rng.coupling();
                        let cross = rng.coupling();
                        s.orbital_hopping = Some(vec![vec![v, cross], vec![cross, 0.5 * v]]);
                    }
                    specs.push(s);
                }
            }
        }
    }
    specs
}

fn encoding_invariants(r: &mut Report) {
    let start = Instant::now();
    let mut rng = Lcg(SEED);
    let (mut hermitian, mut commuting, mut relabel, mut identical) = (0, 0, 0, 0);
    let specs = small_specs(8, &mut rng);
    for spec in &specs {
        let h = encode_hamiltonian(spec).unwrap();
        hermitian += h.is_hermitian(1e-12) as usize;
        let c = h.commutator(&number_operator(spec.n_modes()));
        commuting += c.terms().iter().all(|t| t.coeff.norm() < 1e-10) as usize;

        let modes = spec.n_modes();
        let mut perm: Vec<usize> = (0..modes).collect();
        for i in (1..modes).rev() {
            perm.swap(i, rng.next() as usize % (i + 1));
        }
        let terms = build_hamiltonian(spec).unwrap().terms;
        let moved: Vec<FermionTerm> = terms
            .iter()
            .map(|t| {
                let ops = t
                    .ops
                    .iter()
                    .map(|op| FermionOp {
                        mode: perm[op.mode],
                        dagger: op.dagger,
                    })
                    .collect();
                FermionTerm::new(t.coeff, ops)
            })
            .collect();
        let a = jordan_wigner(modes, &terms).alpha();
        let b = jordan_wigner(modes, &moved).alpha();
        relabel += ((a - b).abs() <= 1e-9 * a.max(1.0)) as usize;

        let once = serde_json::to_string(&h).unwrap();
        let twice = serde_json::to_string(&encode_hamiltonian(&spec.clone()).unwrap()).unwrap();
        identical += (once == twice) as usize;
    }
    let n = specs.len();
    r.record(
        8,
        "encoding invariants",
        start,
        &[
            (format!("Hermitian {hermitian}/{n}"), hermitian == n),
            (
                format!("[H, N] = 0 on at most 8 modes {commuting}/{n}"),
                commuting == n,
            ),
            (
                format!("alpha invariant under relabeling {relabel}/{n}"),
                relabel == n,
            ),
            (
                format!("byte-identical reruns {identical}/{n}"),
                identical == n,
            ),
        ],
    );
}

#[test]
fn acceptance() {
    let mut r = Report { failed: Vec::new() };
    circuit_chain(&mut r);
    signal_resolution(&mut r);
    sweep_monotonicity(&mut r);
    oracle_closure(&mut r);
    utility_closures(&mut r);
    utility_headlines(&mut r);
    physical_trends(&mut r);
    encoding_invariants(&mut r);
    println!("{} of 8 criteria pass", 8 - r.failed.len());
    assert!(r.failed.is_empty(), "failing criteria: {:?}", r.failed);
}
