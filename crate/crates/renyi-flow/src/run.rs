//! Executes one experiment and writes its artifact directory.

use std::fs;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use renyi_flow_core::bounds::{
    compare_rates, concavity_check, inequality_suite, verify_decay, InequalityReport, ItemKind, GAUSSIAN_ITEMS,
};
use renyi_flow_core::evolve::{energy_rate_check, l1_error};
use renyi_flow_core::profiles::matched;
use renyi_flow_core::{solve, to_scaled, EntropyReport, GaussianMixture, SolverConfig};

use crate::config::{ExperimentConfig, InitialDatum, Scenario};
use crate::datum::{initial_density, random_mixture, two_bump};
use crate::error::{solver_error, HarnessError, Result};
use crate::io::{self, num, DensityRecord, ProfileRecord};

/// Tolerances asserted by [`run`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Decay bound under the heat flow.
    pub decay_slack_linear: f64,
    /// Decay bound under `v_t = Δv^p`, `p ≠ 1`.
    pub decay_slack_nonlinear: f64,
    /// Increase of the Shannon relative entropy under the heat flow.
    pub monotonicity: f64,
    pub mass_drift: f64,
    /// Relative mismatch of `dE/dt = 2n ∫ v^p`.
    pub energy_law: f64,
    /// Positive part of `Δ² N_p / N_p`.
    pub concavity: f64,
    /// Moments of the rescaled snapshots.
    pub scaled_moments: f64,
    /// `L¹` distance to the exact heat solution.
    pub l1_vs_exact: f64,
    /// Inequalities that only involve quadrature.
    pub quadrature_slack: f64,
    /// Inequalities built on the discrete Fisher information, relative.
    pub fisher_slack: f64,
    /// Equality cases on matched profiles.
    pub equality: f64,
    /// Bounds and rates at their starting point.
    pub saturation: f64,
}

pub const TOLERANCES: Tolerances = Tolerances {
    decay_slack_linear: 1e-3,
    decay_slack_nonlinear: 1e-2,
    monotonicity: 1e-6,
    mass_drift: 1e-8,
    energy_law: 2e-2,
    concavity: 1e-3,
    scaled_moments: 1e-6,
    l1_vs_exact: 5e-3,
    quadrature_slack: 1e-6,
    fisher_slack: 1e-3,
    equality: 1e-4,
    saturation: 1e-10,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = "<=")]
    AtMost,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::AtLeast => ">=",
            Relation::AtMost => "<=",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub relation: Relation,
    pub limit: f64,
    pub passed: bool,
}

impl Check {
    pub fn at_least(name: &str, value: f64, limit: f64) -> Self {
        Check { name: name.into(), value, relation: Relation::AtLeast, limit, passed: value >= limit }
    }

    pub fn at_most(name: &str, value: f64, limit: f64) -> Self {
        Check { name: name.into(), value, relation: Relation::AtMost, limit, passed: value <= limit }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunSummary {
    pub scenario: Scenario,
    pub passed: bool,
    /// Smallest decay slack, or smallest inequality slack for sweeps.
    pub min_slack: Option<f64>,
    /// Largest `r₂ - r₁`.
    pub max_gap: Option<f64>,
    /// `L¹` distance to the exact heat solution at `t_end`.
    pub l1_error: Option<f64>,
    pub checks: Vec<Check>,
}

impl RunSummary {
    fn new(scenario: Scenario, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        RunSummary { scenario, passed, min_slack: None, max_gap: None, l1_error: None, checks }
    }
}

#[derive(Serialize)]
struct Versions {
    #[serde(rename = "renyi-flow")]
    harness: &'static str,
    #[serde(rename = "renyi-flow-core")]
    core: &'static str,
}

#[derive(Serialize)]
struct RunManifest<'a> {
    config: &'a ExperimentConfig,
    versions: Versions,
    tolerances: Tolerances,
    summary: &'a RunSummary,
}

/// Validates `config`, runs its scenario into `config.output_dir` and writes
/// `manifest.json` there.
pub fn run(config: &ExperimentConfig) -> Result<RunSummary> {
    config.validate()?;
    let out = config.output_dir.as_path();
    fs::create_dir_all(out).map_err(HarnessError::io(out))?;
    let summary = match config.scenario {
        Scenario::Heat | Scenario::Pme | Scenario::FastDiffusion => evolve(config, out)?,
        Scenario::InequalitySweep => inequality_sweep(config, out)?,
        Scenario::RateComparison => rate_comparison(config, out)?,
    };
    let manifest = RunManifest {
        config,
        versions: Versions { harness: env!("CARGO_PKG_VERSION"), core: renyi_flow_core::VERSION },
        tolerances: TOLERANCES,
        summary: &summary,
    };
    io::write_json(&out.join("manifest.json"), &manifest)?;
    Ok(summary)
}

/// The mixture behind the initial datum, when the exact heat solution is known.
fn heat_oracle(config: &ExperimentConfig) -> Result<Option<GaussianMixture>> {
    Ok(match config.initial_datum {
        InitialDatum::Gaussian => Some(GaussianMixture::gaussian(config.n, config.e0 / config.n as f64)?),
        InitialDatum::TwoBump => Some(two_bump().normalized(config.e0)?),
        _ => None,
    })
}

fn evolve(config: &ExperimentConfig, out: &Path) -> Result<RunSummary> {
    let (p, n, e0) = (config.p, config.n, config.e0);
    let heat = config.scenario == Scenario::Heat;
    let grid = config.grid.build(n)?;
    let v0 = initial_density(config, &grid)?;
    let (profile, _) = matched(p, n, e0, &grid)?;
    io::write_json(&out.join("initial.json"), &DensityRecord::from_density(&v0))?;
    io::write_json(&out.join("profile.json"), &ProfileRecord::from(&profile))?;

    let solver = SolverConfig::uniform(p, n, config.t_end, config.snapshot_count);
    let traj = solve(&v0, &solver).map_err(solver_error)?;
    io::write_trajectory(&out.join("trajectory"), &traj)?;
    let scaled = to_scaled(&traj)?;
    io::write_scaled(&out.join("scaled"), &scaled)?;

    let curve = verify_decay(&traj, p)?;
    io::write_decay_curve(&out.join("decay_curve.csv"), &curve)?;
    let entropies = traj
        .snapshots
        .iter()
        .map(|s| Ok(io::entropy_row(s.t, &EntropyReport::evaluate(&s.density, p, None)?)))
        .collect::<Result<Vec<_>>>()?;
    io::write_csv(&out.join("entropies.csv"), &io::entropy_header(), entropies)?;
    // Numerical snapshots end at the grid edge; for fast diffusion that cut
    // carries visible mass, so the suite runs on the datum, whose tail is analytic.
    let suite = inequality_suite(&v0, p)?;
    io::write_csv(&out.join("inequalities.csv"), &io::INEQUALITY_HEADER, io::inequality_rows("initial", &suite))?;

    let tol = TOLERANCES;
    let mut checks = Vec::new();
    let decay_tol = if heat { tol.decay_slack_linear } else { tol.decay_slack_nonlinear };
    // the t = 0 entry is saturated by construction
    let min_slack = curve.entries[1..].iter().map(|e| e.slack).fold(f64::INFINITY, f64::min);
    checks.push(Check::at_most("bound-saturation", (curve.entries[0].h_bound - curve.h0).abs(), tol.saturation));
    checks.push(Check::at_least("decay-slack", min_slack, -decay_tol));
    if heat {
        checks.push(Check::at_most("entropy-increase", curve.max_increase(), tol.monotonicity));
    }
    checks.push(Check::at_most("mass-drift", traj.report.max_mass_drift, tol.mass_drift));
    let rate = energy_rate_check(&traj)?;
    checks.push(Check::at_most("energy-law", rate.max_relative_mismatch, tol.energy_law));
    let concavity = concavity_check(&traj, p, Some(tol.concavity))?;
    checks.push(Check::at_most("concavity", concavity.max_relative, tol.concavity));
    let moments = scaled
        .entries
        .iter()
        .map(|e| {
            let m = e.u.moments();
            (m.mass - 1.0).abs().max(m.mean.abs()).max((m.energy - scaled.e0).abs() / scaled.e0)
        })
        .fold(0.0, f64::max);
    checks.push(Check::at_most("scaled-moments", moments, tol.scaled_moments));
    let quadrature = suite.items.iter().filter(|i| i.kind == ItemKind::Inequality && i.quadrature_only());
    let stencil = suite.items.iter().filter(|i| i.kind == ItemKind::Inequality && !i.quadrature_only());
    let suite_slack = quadrature.map(|i| i.slack).fold(f64::INFINITY, f64::min);
    let fisher_slack = stencil.map(|i| i.slack / i.lhs.abs().max(i.rhs.abs())).fold(f64::INFINITY, f64::min);
    checks.push(Check::at_least("suite-slack", suite_slack, -tol.quadrature_slack));
    checks.push(Check::at_least("suite-fisher", fisher_slack, -tol.fisher_slack));

    let mut l1 = None;
    if heat {
        if let Some(m) = heat_oracle(config)? {
            let exact = m.heat_evolved(config.t_end).sample(&grid)?;
            let err = l1_error(&traj.snapshots[traj.len() - 1].density, &exact)?;
            checks.push(Check::at_most("l1-vs-exact", err, tol.l1_vs_exact));
            l1 = Some(err);
        }
    }
    let mut summary = RunSummary::new(config.scenario, checks);
    summary.min_slack = Some(min_slack);
    summary.l1_error = l1;
    Ok(summary)
}

fn inequality_min_slack(r: &InequalityReport) -> f64 {
    r.items.iter().filter(|i| i.kind == ItemKind::Inequality).map(|i| i.slack).fold(f64::INFINITY, f64::min)
}

fn inequality_sweep(config: &ExperimentConfig, out: &Path) -> Result<RunSummary> {
    let (p, n, e0) = (config.p, config.n, config.e0);
    let grid = config.grid.build(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut rows = Vec::new();
    let mut mixture_rows = Vec::new();
    let (mut min_slack, mut identity, mut order, mut b5) = (f64::INFINITY, 0.0f64, f64::INFINITY, f64::INFINITY);
    for s in 0..config.samples() {
        let m = random_mixture(&mut rng, n, e0)?;
        for (c, comp) in m.components().iter().enumerate() {
            mixture_rows.push([s.to_string(), c.to_string(), num(comp.weight), num(comp.mean), num(comp.variance)]);
        }
        let f = m.sample(&grid)?;
        let r = inequality_suite(&f, p)?;
        min_slack = min_slack.min(inequality_min_slack(&r));
        for i in r.items.iter().filter(|i| i.kind == ItemKind::Equality) {
            identity = identity.max(i.slack.abs());
        }
        order = order.min(r.lsi_ratio_slack - r.b5_log_slack);
        b5 = b5.min(r.b5_log_slack);
        rows.extend(io::inequality_rows(&s.to_string(), &r));
    }
    // lsi and b5 are tight on the Gaussian, everything else on B
    let (_, b) = matched(p, n, e0, &grid)?;
    let (_, g) = matched(1.0, n, e0, &grid)?;
    let (rb, rg) = (inequality_suite(&b, p)?, inequality_suite(&g, p)?);
    let equality = rb
        .items
        .iter()
        .filter(|i| !GAUSSIAN_ITEMS.contains(&i.name))
        .chain(rg.items.iter().filter(|i| GAUSSIAN_ITEMS.contains(&i.name)))
        .map(|i| i.slack.abs())
        .fold(0.0, f64::max);
    rows.extend(io::inequality_rows("profile", &rb));
    rows.extend(io::inequality_rows("gaussian", &rg));
    io::write_csv(&out.join("inequalities.csv"), &io::INEQUALITY_HEADER, rows)?;
    io::write_csv(&out.join("mixtures.csv"), &["sample", "component", "weight", "mean", "variance"], mixture_rows)?;

    let tol = TOLERANCES;
    let mut checks = vec![
        Check::at_least("quadrature-slack", min_slack, -tol.quadrature_slack),
        Check::at_most("equality-cases", equality, tol.equality),
    ];
    if (p - 1.0).abs() > renyi_flow_core::SHANNON_WINDOW {
        checks.push(Check::at_most("identity-residual", identity, tol.quadrature_slack));
    } else {
        checks.push(Check::at_least("b5-slack", b5, -tol.quadrature_slack));
        checks.push(Check::at_least("lsi-over-b5", order, -tol.quadrature_slack));
    }
    let mut summary = RunSummary::new(config.scenario, checks);
    summary.min_slack = Some(min_slack);
    Ok(summary)
}

/// Points of the `τ` grid on `[0, 5 E₀/(2n)]`.
pub const RATE_POINTS: usize = 100;

fn rate_comparison(config: &ExperimentConfig, out: &Path) -> Result<RunSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut rows = Vec::new();
    let (mut gap_min, mut saturation, mut max_gap) = (f64::INFINITY, 0.0f64, 0.0f64);
    for s in 0..config.samples() {
        let h0 = rng.gen_range(0.01..=5.0);
        let e0 = rng.gen_range(0.1..=10.0);
        let n = rng.gen_range(1..=3usize);
        let end = 5.0 * e0 / (2.0 * n as f64);
        let taus: Vec<f64> = (0..RATE_POINTS).map(|k| end * k as f64 / (RATE_POINTS - 1) as f64).collect();
        let table = compare_rates(h0, e0, n, &taus);
        saturation = saturation.max((table.rows[0].r1 - table.rows[0].r2).abs());
        for r in &table.rows[1..] {
            gap_min = gap_min.min(r.r2 - r.r1);
        }
        max_gap = max_gap.max(table.max_gap);
        rows.extend(io::rate_rows(s, &table));
    }
    io::write_csv(&out.join("rates.csv"), &io::RATE_HEADER, rows)?;
    let checks = vec![
        Check::at_most("rate-saturation", saturation, TOLERANCES.saturation),
        Check::at_least("rate-gap", gap_min, TOLERANCES.saturation),
    ];
    let mut summary = RunSummary::new(config.scenario, checks);
    summary.max_gap = Some(max_gap);
    summary.min_slack = Some(gap_min);
    Ok(summary)
}
