//! Decay bounds for the relative entropies, rate comparison, entropy-power
//! concavity and the functional inequality suite.

use alloc::vec::Vec;

use crate::density::Density;
use crate::entropy::{self, SHANNON_WINDOW};
use crate::evolve::{three_point_derivative, Provenance, Trajectory};
use crate::math::Real;
use crate::rescale::{tau_of_t, ScaledTrajectory};
use crate::{check_admissible, Error, Result};

/// Relative slack below which `E_t < E₀` is treated as rounding.
const ENERGY_ROUNDING: f64 = 1e-12;

/// Tolerance of inequality items that involve quadrature only.
pub const QUADRATURE_SLACK: f64 = 1e-6;

/// Relative tolerance of items built on the discrete Fisher information,
/// whose stencil error dominates near equality cases.
pub const FISHER_SLACK: f64 = 1e-3;

/// Items of [`inequality_suite`] that involve `I` or `I_p`.
pub const FISHER_ITEMS: [&str; 4] = ["lsi", "b5", "iso-renyi", "mckean"];

/// `1 - e^{-2H/n}`, accurate for small `H`.
#[inline]
fn saturation(h0: f64, n: usize) -> f64 {
    -(-2.0 * h0 / n as f64).exp_m1()
}

/// `-(n/2) log(1 - q x)` with `q = 1 - e^{-2H₀/n}`.
#[inline]
fn improved(h0: f64, n: usize, x: f64) -> f64 {
    -0.5 * n as f64 * (-saturation(h0, n) * x).ln_1p()
}

/// Heat-equation bound `-(n/2) log[1 - (1 - e^{-2H₀/n}) E₀/(E₀ + 2nt)]`.
pub fn linear_bound(h0: f64, e0: f64, n: usize, t: f64) -> f64 {
    if t == 0.0 || h0 == 0.0 {
        return h0;
    }
    improved(h0, n, e0 / (e0 + 2.0 * n as f64 * t))
}

/// Nonlinear bound `-(n/2) log[1 - (1 - e^{-2H₀/n}) E₀/E_t]` from the
/// measured second moment `E_t ≥ E₀`.
pub fn nonlinear_bound(h0: f64, e0: f64, n: usize, e_t: f64) -> Result<f64> {
    if !(e0 > 0.0) {
        return Err(Error::NonPositiveEnergy(e0));
    }
    if e_t < e0 * (1.0 - ENERGY_ROUNDING) {
        return Err(Error::EnergyBelowInitial { energy: e_t, initial: e0 });
    }
    if e_t <= e0 || h0 == 0.0 {
        return Ok(h0);
    }
    Ok(improved(h0, n, e0 / e_t))
}

/// Improved rate `r₁(τ) = -(n/2) log[1 - (1 - e^{-2H₀/n}) e^{-2nτ/E₀}]`.
pub fn improved_rate(h0: f64, e0: f64, n: usize, tau: f64) -> f64 {
    if tau == 0.0 {
        return h0;
    }
    improved(h0, n, (-2.0 * n as f64 * tau / e0).exp())
}

/// Exponential rate `r₂(τ) = H₀ e^{-2nτ/E₀}`.
pub fn exponential_rate(h0: f64, e0: f64, n: usize, tau: f64) -> f64 {
    h0 * (-2.0 * n as f64 * tau / e0).exp()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateRow {
    pub tau: f64,
    pub r1: f64,
    pub r2: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RateTable {
    pub h0: f64,
    pub e0: f64,
    pub n: usize,
    pub rows: Vec<RateRow>,
    /// `max_τ (r₂ - r₁)`.
    pub max_gap: f64,
    /// Where the gap is largest.
    pub max_gap_tau: f64,
    /// `r₁ ≤ r₂` at every row.
    pub ordered: bool,
}

/// Tabulates `r₁` and `r₂` on `taus`.
pub fn compare_rates(h0: f64, e0: f64, n: usize, taus: &[f64]) -> RateTable {
    let rows: Vec<RateRow> = taus
        .iter()
        .map(|&tau| RateRow { tau, r1: improved_rate(h0, e0, n, tau), r2: exponential_rate(h0, e0, n, tau) })
        .collect();
    let (mut max_gap, mut max_gap_tau) = (0.0, 0.0);
    for r in &rows {
        if r.r2 - r.r1 > max_gap {
            max_gap = r.r2 - r.r1;
            max_gap_tau = r.tau;
        }
    }
    let ordered = rows.iter().all(|r| r.r1 <= r.r2);
    RateTable { h0, e0, n, rows, max_gap, max_gap_tau, ordered }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    /// Shannon relative entropy under the heat flow.
    LinearShannon,
    /// Relative Rényi entropy under `v_t = Δv^p`, `p ≠ 1`.
    NonlinearRenyi,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::LinearShannon => "linear-shannon",
            Theorem::NonlinearRenyi => "nonlinear-renyi",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayEntry {
    pub t: f64,
    pub tau: f64,
    pub energy: f64,
    pub h_measured: f64,
    pub h_bound: f64,
    /// `h_bound - h_measured`.
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecayCurve {
    pub theorem: Theorem,
    pub p: f64,
    pub n: usize,
    pub e0: f64,
    pub h0: f64,
    pub entries: Vec<DecayEntry>,
}

impl DecayCurve {
    pub fn min_slack(&self) -> f64 {
        self.entries.iter().map(|e| e.slack).fold(f64::INFINITY, f64::min)
    }

    /// Largest increase of `h_measured` between consecutive snapshots.
    pub fn max_increase(&self) -> f64 {
        self.entries.windows(2).map(|w| w[1].h_measured - w[0].h_measured).fold(0.0, f64::max)
    }
}

/// Measures `Ĥ_p(v_k)` against the moment-matched profile of every snapshot
/// (the Shannon relative entropy against the Gaussian at `p = 1`) and
/// compares it with the decay bound evaluated at the measured `E_k`.
pub fn verify_decay(traj: &Trajectory, p: f64) -> Result<DecayCurve> {
    let n = traj.config.n;
    check_admissible(p, n)?;
    if traj.is_empty() {
        return Err(Error::TooFewSnapshots { needed: 1, found: 0 });
    }
    let taus = tau_of_t(traj)?;
    let e0 = traj.snapshots[0].energy;
    let measured =
        traj.snapshots.iter().map(|s| entropy::relative_renyi_hat(&s.density, p)).collect::<Result<Vec<_>>>()?;
    let h0 = measured[0];
    let theorem = if (p - 1.0).abs() <= SHANNON_WINDOW { Theorem::LinearShannon } else { Theorem::NonlinearRenyi };
    let mut entries = Vec::with_capacity(traj.len());
    for ((s, &tau), &h) in traj.snapshots.iter().zip(&taus).zip(&measured) {
        // clamp rounding-level dips of the measured energy
        let bound = nonlinear_bound(h0.max(0.0), e0, n, s.energy.max(e0))?;
        entries.push(DecayEntry { t: s.t, tau, energy: s.energy, h_measured: h, h_bound: bound, slack: bound - h });
    }
    Ok(DecayCurve { theorem, p, n, e0, h0, entries })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DifferentialReport {
    pub taus: Vec<f64>,
    /// Three-point `dĤ_p/dτ`.
    pub derivative: Vec<f64>,
    /// `-(n²/E₀)(e^{2Ĥ_p/n} - 1)`.
    pub bound: Vec<f64>,
    /// `max (derivative - bound)`; nonpositive when the inequality holds.
    pub max_excess: f64,
}

/// Checks `dĤ_p(u)/dτ ≤ -(n²/E₀)(e^{2Ĥ_p(u)/n} - 1)` along a rescaled
/// trajectory at interior entries.
pub fn differential_inequality_check(scaled: &ScaledTrajectory, p: f64) -> Result<DifferentialReport> {
    let e = &scaled.entries;
    if e.len() < 3 {
        return Err(Error::TooFewSnapshots { needed: 3, found: e.len() });
    }
    let n = scaled.config.n;
    let nf = n as f64;
    let (_, reference) = entropy::matched_reference(&e[0].u, p)?;
    let h = e.iter().map(|x| entropy::relative_renyi_hat_against(&x.u, &reference, p)).collect::<Result<Vec<_>>>()?;
    let mut report = DifferentialReport {
        taus: Vec::new(),
        derivative: Vec::new(),
        bound: Vec::new(),
        max_excess: f64::NEG_INFINITY,
    };
    for i in 1..e.len() - 1 {
        let d = three_point_derivative([e[i - 1].tau, e[i].tau, e[i + 1].tau], [h[i - 1], h[i], h[i + 1]]);
        let b = -nf * nf / scaled.e0 * (2.0 * h[i] / nf).exp_m1();
        report.max_excess = report.max_excess.max(d - b);
        report.taus.push(e[i].tau);
        report.derivative.push(d);
        report.bound.push(b);
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConcavityMode {
    /// `|Δ²N_p| ≤ tol · N_p`, for exact self-similar data.
    Linear,
    /// `Δ²N_p ≤ tol · N_p`.
    Concave,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConcavityReport {
    pub p: f64,
    pub mode: ConcavityMode,
    pub tolerance: f64,
    pub times: Vec<f64>,
    /// `N_p(v(t_k))`; the Shannon entropy power at `p = 1`.
    pub powers: Vec<f64>,
    /// `N_{k+1} - 2N_k + N_{k-1}` at interior snapshots.
    pub second_differences: Vec<f64>,
    /// Largest `Δ²N/N` (signed).
    pub max_relative: f64,
    /// Largest `|Δ²N|/N`.
    pub max_abs_relative: f64,
    pub passed: bool,
}

/// Default tolerance of [`concavity_check`] by provenance.
pub fn concavity_tolerance(provenance: Provenance) -> f64 {
    match provenance {
        Provenance::ExactGaussian => 1e-6,
        Provenance::ExactBarenblatt | Provenance::Numerical => 1e-3,
    }
}

/// Second differences of the entropy power along a trajectory with uniform
/// snapshot spacing. Exact trajectories are checked for linearity, numerical
/// ones for concavity.
pub fn concavity_check(traj: &Trajectory, p: f64, tolerance: Option<f64>) -> Result<ConcavityReport> {
    check_admissible(p, traj.config.n)?;
    let k = traj.len();
    if k < 4 {
        return Err(Error::TooFewSnapshots { needed: 4, found: k });
    }
    let times = traj.times();
    let step = times[1] - times[0];
    for (i, w) in times.windows(2).enumerate() {
        if !(((w[1] - w[0]) - step).abs() <= 1e-9 * step.abs().max(1e-300)) || step <= 0.0 {
            return Err(Error::NonuniformSpacing { index: i + 1 });
        }
    }
    let powers = traj.snapshots.iter().map(|s| entropy::renyi_power(&s.density, p)).collect::<Result<Vec<_>>>()?;
    let mode = match traj.provenance {
        Provenance::Numerical => ConcavityMode::Concave,
        _ => ConcavityMode::Linear,
    };
    let tolerance = tolerance.unwrap_or_else(|| concavity_tolerance(traj.provenance));
    let second: Vec<f64> = powers.windows(3).map(|w| w[2] - 2.0 * w[1] + w[0]).collect();
    let rel: Vec<f64> = second.iter().zip(&powers[1..]).map(|(d, n)| d / n).collect();
    let max_relative = rel.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let max_abs_relative = rel.iter().map(|r| r.abs()).fold(0.0, f64::max);
    let passed = match mode {
        ConcavityMode::Linear => max_abs_relative <= tolerance,
        ConcavityMode::Concave => max_relative <= tolerance,
    };
    Ok(ConcavityReport {
        p,
        mode,
        tolerance,
        times,
        powers,
        second_differences: second,
        max_relative,
        max_abs_relative,
        passed,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ItemKind {
    /// `lhs ≥ rhs`.
    Inequality,
    /// `lhs = rhs`.
    Equality,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityItem {
    pub name: &'static str,
    pub kind: ItemKind,
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs - rhs`.
    pub slack: f64,
    pub tolerance: f64,
}

impl InequalityItem {
    fn new(name: &'static str, kind: ItemKind, lhs: f64, rhs: f64) -> Self {
        let tolerance =
            if FISHER_ITEMS.contains(&name) { FISHER_SLACK * lhs.abs().max(rhs.abs()) } else { QUADRATURE_SLACK };
        InequalityItem { name, kind, lhs, rhs, slack: lhs - rhs, tolerance }
    }

    /// Involves quadrature only, no derivative stencil.
    pub fn quadrature_only(&self) -> bool {
        !FISHER_ITEMS.contains(&self.name)
    }

    pub fn holds(&self) -> bool {
        match self.kind {
            ItemKind::Inequality => self.slack >= -self.tolerance,
            ItemKind::Equality => self.slack.abs() <= self.tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InequalityReport {
    pub p: f64,
    pub n: usize,
    pub items: Vec<InequalityItem>,
    /// `∫ |f - B|` against the moment-matched profile.
    pub l1_distance: f64,
    /// Empirical `Ĥ_p / (∫|f - B|)²`.
    pub ck_constant: f64,
    /// `(I E₀/n² - 1) - (2/n)(R(M) - R(f))`; log-Sobolev in ratio form.
    pub lsi_ratio_slack: f64,
    /// `log(I E₀/n²) - (2/n)(R(M) - R(f))`; the isoperimetric inequality
    /// in log form, never larger than `lsi_ratio_slack`.
    pub b5_log_slack: f64,
}

impl InequalityReport {
    pub fn min_slack(&self) -> f64 {
        self.items.iter().map(|i| i.slack).fold(f64::INFINITY, f64::min)
    }

    pub fn all_hold(&self) -> bool {
        self.items.iter().all(|i| i.holds())
    }

    pub fn item(&self, name: &str) -> Option<&InequalityItem> {
        self.items.iter().find(|i| i.name == name)
    }
}

/// Constant of the L¹ lower bound `F_p ≥ C (∫|f - B|)²`, from the convexity
/// of `s ↦ s^p/(p-1)` and Cauchy–Schwarz.
fn ck_lower_constant(f: &Density, b: &Density, p: f64) -> Result<f64> {
    if (p - 1.0).abs() <= SHANNON_WINDOW {
        // Pinsker
        return Ok(0.5);
    }
    let g = f.grid();
    if p <= 2.0 {
        // second derivative p s^{p-2} is smallest at max(f, B)
        let q = 2.0 - p;
        let on_grid: f64 =
            g.weights().iter().zip(f.values().iter().zip(b.values())).map(|(w, (&a, &r))| w * a.max(r).powf(q)).sum();
        let decay = f.tail().or(b.tail()).map_or(0.0, |t| 2.0 * t.exponent * q);
        let tail = f.outer_pair_integral(b, |_, a, r| a.max(r).powf(q), decay)?;
        return Ok(0.5 * p / (on_grid + tail));
    }
    // F_p = ∫ W (f - B)², so (∫|f - B|)² ≤ F_p ∫ 1/W
    let inv: f64 = g
        .weights()
        .iter()
        .zip(f.values().iter().zip(b.values()))
        .filter(|(_, (a, r))| a != r)
        .map(|(w, (&a, &r))| {
            let gap = (a.powf(p) - r.powf(p) - p * r.powf(p - 1.0) * (a - r)) / (p - 1.0);
            w * (a - r) * (a - r) / gap
        })
        .sum();
    Ok(if inv > 0.0 { 1.0 / inv } else { f64::INFINITY })
}

/// Items of [`inequality_suite`] whose equality case is the Gaussian; the
/// others are tight on the matched profile `B`.
pub const GAUSSIAN_ITEMS: [&str; 2] = ["lsi", "b5"];

/// Evaluates the functional inequalities on a normalized density `f`:
///
/// - `lsi`: `I(f) - I(M) ≥ (2n/E)(R(M) - R(f))`;
/// - `b5`: `I(f) N(f) ≥ I(M) N(M)`;
/// - `iso-renyi`: `I_p(f)/I_p(B) ≥ exp{-(2/n + p - 1)(R_p(f) - R_p(B))}`;
/// - `mckean`: `I_p(f) ≥ n² ∫f^p / E(f)`;
/// - `ck-upper`: `∫B^p Ĥ_p ≥ F_p` for `p < 1`, `∫f^p Ĥ_p ≥ F_p` for `p > 1`;
/// - `ck-l1`: `F_p ≥ C (∫|f - B|)²`;
/// - `posi`: `Ĥ_p ≥ 0`;
/// - `lambda-max`: `Λ_p(B) ≥ Λ_p(f)`;
/// - `two-density`: `H_p(f|B) = Ĥ_p` for `p < 1`, `Ĥ_p ≥ H_p(f|B)` for
///   `p > 1` when `supp f ⊆ supp B` (omitted otherwise).
///
/// `M` is the Gaussian and `B` the profile with the second moment of `f`,
/// both sampled on the grid of `f`.
pub fn inequality_suite(f: &Density, p: f64) -> Result<InequalityReport> {
    let n = f.dim();
    let nf = n as f64;
    check_admissible(p, n)?;
    let (_, m) = entropy::matched_reference(f, 1.0)?;
    let (_, b) = entropy::matched_reference(f, p)?;
    let e = f.energy();
    let shannon_p = (p - 1.0).abs() <= SHANNON_WINDOW;
    use ItemKind::*;

    let (i_f, i_m) = (entropy::fisher(f)?, entropy::fisher(&m)?);
    let (r_f, r_m) = (entropy::shannon(f)?, entropy::shannon(&m)?);
    let (n_f, n_m) = ((2.0 * r_f / nf).exp(), (2.0 * r_m / nf).exp());
    let mut items = alloc::vec![
        InequalityItem::new("lsi", Inequality, i_f - i_m, 2.0 * nf / e * (r_m - r_f)),
        InequalityItem::new("b5", Inequality, i_f * n_f, i_m * n_m),
    ];
    let ratio = i_f * e / (nf * nf);
    let lsi_ratio_slack = (ratio - 1.0) - 2.0 / nf * (r_m - r_f);
    let b5_log_slack = ratio.ln() - 2.0 / nf * (r_m - r_f);

    let (ip_f, ip_b) = (entropy::fisher_p(f, p)?, entropy::fisher_p(&b, p)?);
    let (rp_f, rp_b) = (entropy::renyi(f, p)?, entropy::renyi(&b, p)?);
    let power = if shannon_p { 2.0 / nf } else { 2.0 / nf + p - 1.0 };
    items.push(InequalityItem::new("iso-renyi", Inequality, ip_f / ip_b, (-power * (rp_f - rp_b)).exp()));
    let lp_f = f.lp_integral(p)?;
    items.push(InequalityItem::new("mckean", Inequality, ip_f, nf * nf * lp_f / e));

    let h_hat = rp_b - rp_f;
    let f_p = entropy::ralston(f, &b, p)?;
    let weight = if p < 1.0 && !shannon_p { b.lp_integral(p)? } else { lp_f };
    items.push(InequalityItem::new("ck-upper", Inequality, weight * h_hat, f_p));
    let l1 = entropy::l1_distance(f, &b)?;
    items.push(InequalityItem::new("ck-l1", Inequality, f_p, ck_lower_constant(f, &b, p)? * l1 * l1));
    items.push(InequalityItem::new("posi", Inequality, h_hat, 0.0));
    let half_log_e = 0.5 * nf * e.ln();
    items.push(InequalityItem::new("lambda-max", Inequality, rp_b - half_log_e, rp_f - half_log_e));

    if !shannon_p {
        match entropy::relative_renyi(f, &b, p) {
            Ok(h2) if p < 1.0 => items.push(InequalityItem::new("two-density", Equality, h2, h_hat)),
            Ok(h2) => items.push(InequalityItem::new("two-density", Inequality, h_hat, h2)),
            Err(Error::RelativeEntropyUndefined) => {}
            Err(err) => return Err(err),
        }
    }

    Ok(InequalityReport {
        p,
        n,
        items,
        l1_distance: l1,
        ck_constant: if l1 > 0.0 { h_hat / (l1 * l1) } else { f64::NAN },
        lsi_ratio_slack,
        b5_log_slack,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolve::{exact_barenblatt, exact_heat, solve, SolverConfig};
    use crate::grid::Grid;
    use crate::mixture::{GaussianComponent, GaussianMixture};
    use crate::profiles::barenblatt_matched;
    use crate::rescale::to_scaled;
    use alloc::sync::Arc;

    fn line(l: f64, pts: usize) -> Arc<Grid> {
        Arc::new(Grid::line(l, pts).unwrap())
    }

    fn two_bump() -> GaussianMixture {
        GaussianMixture::new(
            1,
            alloc::vec![
                GaussianComponent { weight: 0.5, mean: -1.0, variance: 0.2 },
                GaussianComponent { weight: 0.5, mean: 1.0, variance: 0.2 },
            ],
        )
        .unwrap()
        .normalized(1.0)
        .unwrap()
    }

    #[test]
    fn bounds_saturate_and_vanish() {
        assert_eq!(linear_bound(0.7, 1.0, 1, 0.0), 0.7);
        assert_eq!(linear_bound(0.0, 1.0, 1, 3.0), 0.0);
        assert!(linear_bound(0.7, 1.0, 1, 1e9) < 1e-8);
        assert_eq!(nonlinear_bound(0.7, 2.0, 3, 2.0).unwrap(), 0.7);
        assert!(nonlinear_bound(0.7, 2.0, 3, 1e12).unwrap() < 1e-9);
        assert!(matches!(nonlinear_bound(0.7, 2.0, 3, 1.0), Err(Error::EnergyBelowInitial { .. })));
    }

    #[test]
    fn nonlinear_bound_is_rate_at_tau() {
        let (h0, e0, n) = (0.4, 1.5, 2);
        for &e_t in &[1.5, 2.0, 7.0, 40.0] {
            let tau = e0 / (2.0 * n as f64) * (e_t / e0).ln();
            let a = nonlinear_bound(h0, e0, n, e_t).unwrap();
            assert!((a - improved_rate(h0, e0, n, tau)).abs() < 1e-10);
        }
        // the heat bound is the nonlinear one at E(t) = E₀ + 2nt
        let lb = linear_bound(h0, e0, n, 0.8);
        assert!((lb - nonlinear_bound(h0, e0, n, e0 + 4.0 * 0.8).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn rates_ordered() {
        let taus: Vec<f64> = (0..100).map(|k| 0.05 * k as f64).collect();
        let table = compare_rates(1.0, 1.0, 1, &taus);
        assert!(table.ordered);
        assert_eq!(table.rows[0].r1, table.rows[0].r2);
        assert!(table.rows[1..].iter().all(|r| r.r1 < r.r2));
        assert!(table.max_gap > 0.0);
        let small = compare_rates(1e-4, 1.0, 1, &[0.7]);
        assert!((small.rows[0].r1 / small.rows[0].r2 - 1.0).abs() < 1e-3);
    }

    #[test]
    fn heat_decay_within_bound() {
        let g = line(25.0, 2001);
        let times: Vec<f64> = (0..=20).map(|k| 0.25 * k as f64).collect();
        let traj = exact_heat(&two_bump(), &g, &times).unwrap();
        let curve = verify_decay(&traj, 1.0).unwrap();
        assert_eq!(curve.theorem, Theorem::LinearShannon);
        assert!((curve.entries[0].h_bound - curve.h0).abs() < 1e-10);
        assert!(curve.min_slack() >= -1e-3, "{}", curve.min_slack());
        assert!(curve.max_increase() <= 1e-6);
    }

    #[test]
    fn barenblatt_curve_is_flat() {
        let g = line(10.0, 1001);
        let (b, _) = barenblatt_matched(2.0, 1, 1.0, &g).unwrap();
        let traj = exact_barenblatt(&b, &g, &[0.0, 0.5, 1.0]).unwrap();
        let curve = verify_decay(&traj, 2.0).unwrap();
        for e in &curve.entries {
            assert!(e.h_measured.abs() <= 1e-6 && e.h_bound <= 1e-6, "{e:?}");
        }
    }

    #[test]
    fn entropy_powers_linear_on_exact_data() {
        let g = line(25.0, 2001);
        let times: Vec<f64> = (0..6).map(|k| 0.5 * k as f64).collect();
        let heat = exact_heat(&GaussianMixture::gaussian(1, 1.0).unwrap(), &g, &times).unwrap();
        let r = concavity_check(&heat, 1.0, None).unwrap();
        assert_eq!(r.mode, ConcavityMode::Linear);
        assert!(r.passed, "{r:?}");
        let (b, _) = barenblatt_matched(2.0, 1, 1.0, &g).unwrap();
        let bt = exact_barenblatt(&b, &g, &times).unwrap();
        let r = concavity_check(&bt, 2.0, None).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn concavity_needs_uniform_spacing() {
        let g = line(25.0, 1001);
        let heat = exact_heat(&GaussianMixture::gaussian(1, 1.0).unwrap(), &g, &[0.0, 1.0, 2.0, 4.0]).unwrap();
        assert!(matches!(concavity_check(&heat, 1.0, None), Err(Error::NonuniformSpacing { index: 3 })));
    }

    #[test]
    fn suite_on_mixture_and_profiles() {
        let g = line(25.0, 2001);
        let f = two_bump().sample(&g).unwrap();
        for &p in &[0.75, 1.0, 2.0] {
            let r = inequality_suite(&f, p).unwrap();
            for item in &r.items {
                assert!(item.holds(), "p={p} {item:?}");
            }
            assert!(r.lsi_ratio_slack >= r.b5_log_slack && r.b5_log_slack >= 0.0);
            assert!(r.ck_constant > 0.0);
        }
        // the free boundary costs O(h²) in I_p; resolve it for the equality cases
        for (p, g) in [(0.75, g.clone()), (2.0, line(6.0, 2001)), (3.0, line(6.0, 2001))] {
            let (_, b) = barenblatt_matched(p, 1, 1.0, &g).unwrap();
            let r = inequality_suite(&b, p).unwrap();
            assert!(r.item("iso-renyi").unwrap().slack.abs() <= 1e-4, "p={p} {r:?}");
            assert!(r.item("mckean").unwrap().slack.abs() <= 1e-4, "p={p} {:?}", r.item("mckean"));
        }
    }

    #[test]
    fn differential_inequality_along_pme() {
        let g = line(8.0, 801);
        let v0 = two_bump().sample(&g).unwrap();
        let v0 = v0.scaled(1.0 / v0.mass()).unwrap();
        let traj = solve(&v0, &SolverConfig::uniform(2.0, 1, 1.0, 101)).unwrap();
        let scaled = to_scaled(&traj).unwrap();
        let r = differential_inequality_check(&scaled, 2.0).unwrap();
        assert!(r.max_excess <= 1e-2, "{}", r.max_excess);
    }
}
