//! Second-moment rescaling of a trajectory.
//!
//! With `E₀ = E(v(0))`, the rescaled solution is
//! `u(y, τ) = (E/E₀)^{n/2} v(y (E/E₀)^{1/2}, t)` on the clock
//! `τ(t) = (E₀/2n) log(E(t)/E₀)`; it keeps mass 1, mean 0 and energy `E₀`
//! and solves the Fokker–Planck type equation
//! `u_τ = Δu^p / ∫u^p + (n/E₀) ∇·(y u)`.

use alloc::vec::Vec;

use crate::density::Density;
use crate::evolve::{three_point_derivative, Provenance, SolverConfig, Trajectory};
use crate::grid::GridKind;
use crate::math::Real;
use crate::{Error, Result};

/// Relative energy accuracy of the rescaled snapshots.
pub const ENERGY_MATCH: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct ScaledEntry {
    pub t: f64,
    pub tau: f64,
    /// Dilation factor actually applied; starts from `(E_k/E₀)^{1/2}`.
    pub a: f64,
    pub u: Density,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScaledTrajectory {
    pub config: SolverConfig,
    pub provenance: Provenance,
    pub e0: f64,
    pub entries: Vec<ScaledEntry>,
}

impl ScaledTrajectory {
    pub fn taus(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.tau).collect()
    }
}

/// `τ_k = (E₀/2n) log(E_k/E₀)` with `E₀` the first snapshot energy.
pub fn tau_of_t(traj: &Trajectory) -> Result<Vec<f64>> {
    let energies = traj.energies();
    let Some(&e0) = energies.first() else {
        return Err(Error::TooFewSnapshots { needed: 1, found: 0 });
    };
    if let Some(&e) = energies.iter().find(|&&e| !(e > 0.0)) {
        return Err(Error::NonPositiveEnergy(e));
    }
    let n = traj.config.n as f64;
    Ok(energies.iter().map(|&e| e0 / (2.0 * n) * (e / e0).ln()).collect())
}

/// Rescales every snapshot to energy `E₀`. Each dilation factor starts at
/// `(E_k/E₀)^{1/2}` and is corrected until the quadrature energy of `u_k`
/// matches `E₀` to [`ENERGY_MATCH`], which absorbs the interpolation error
/// of the resampling.
pub fn to_scaled(traj: &Trajectory) -> Result<ScaledTrajectory> {
    let taus = tau_of_t(traj)?;
    let e0 = traj.snapshots[0].energy;
    let mut entries = Vec::with_capacity(traj.len());
    for (k, (s, &tau)) in traj.snapshots.iter().zip(&taus).enumerate() {
        if k == 0 {
            entries.push(ScaledEntry { t: s.t, tau, a: 1.0, u: s.density.clone() });
            continue;
        }
        let mut a = (s.energy / e0).sqrt();
        let mut u = s.density.dilate(a)?;
        for _ in 0..20 {
            let ratio = u.energy() / e0;
            if (ratio - 1.0).abs() <= ENERGY_MATCH {
                break;
            }
            a *= ratio.sqrt();
            u = s.density.dilate(a)?;
        }
        entries.push(ScaledEntry { t: s.t, tau, a, u });
    }
    Ok(ScaledTrajectory { config: traj.config.clone(), provenance: traj.provenance, e0, entries })
}

#[derive(Debug, Clone, PartialEq)]
pub struct StationarityReport {
    /// Interior entry times `τ_k`.
    pub taus: Vec<f64>,
    /// `∫ |RHS(u_k)|`.
    pub rhs_l1: Vec<f64>,
    /// `∫ |∂_τ u_k - RHS(u_k)|`.
    pub residual_l1: Vec<f64>,
    pub max_rhs_l1: f64,
    pub max_residual_l1: f64,
}

/// Discrete right-hand side `Δu^p/∫u^p + (n/E₀)∇·(y u)` in flux form on the
/// cells of the solver; zero-volume nodes are left at zero.
pub fn fokker_planck_rhs(u: &Density, p: f64, e0: f64) -> Result<Vec<f64>> {
    let g = u.grid();
    let n = g.dim() as f64;
    let h = g.spacing();
    let v = u.values();
    let len = v.len();
    let norm = u.lp_integral(p)?;
    let w: Vec<f64> = v.iter().map(|x| x.powf(p)).collect();
    let nodes = g.nodes();
    let flux: Vec<f64> = (0..len - 1)
        .map(|i| {
            let y = 0.5 * (nodes[i] + nodes[i + 1]);
            let area = g.surface_factor(y);
            let drift = n / e0 * y * 0.5 * (v[i] + v[i + 1]);
            -area * ((w[i + 1] - w[i]) / h / norm + drift)
        })
        .collect();
    // the solver's zero-volume origin cell exchanges no flux
    let sealed_origin = g.kind() == GridKind::RadialNd && g.dim() >= 2;
    let vol = g.weights();
    let mut rhs = alloc::vec![0.0; len];
    for i in 0..len {
        if vol[i] <= 0.0 {
            continue;
        }
        let inflow = if i == 0 || (sealed_origin && i == 1) { 0.0 } else { flux[i - 1] };
        let outflow = if i == len - 1 { 0.0 } else { flux[i] };
        rhs[i] = (inflow - outflow) / vol[i];
    }
    Ok(rhs)
}

/// Checks the rescaled equation along a scaled trajectory: reports the
/// right-hand side and the residual against the three-point τ-derivative
/// at interior entries.
pub fn stationarity_residual(scaled: &ScaledTrajectory, p: f64) -> Result<StationarityReport> {
    let k = scaled.entries.len();
    if k < 3 {
        return Err(Error::TooFewSnapshots { needed: 3, found: k });
    }
    let e = &scaled.entries;
    let mut report = StationarityReport {
        taus: Vec::new(),
        rhs_l1: Vec::new(),
        residual_l1: Vec::new(),
        max_rhs_l1: 0.0,
        max_residual_l1: 0.0,
    };
    for i in 1..k - 1 {
        let taus = [e[i - 1].tau, e[i].tau, e[i + 1].tau];
        if !(taus[0] < taus[1] && taus[1] < taus[2]) {
            return Err(Error::NonIncreasingTime { index: i });
        }
        let rhs = fokker_planck_rhs(&e[i].u, p, scaled.e0)?;
        let g = e[i].u.grid();
        let (mut rhs_l1, mut res_l1) = (0.0, 0.0);
        for (j, &w) in g.weights().iter().enumerate() {
            let du = three_point_derivative(taus, [e[i - 1].u.values()[j], e[i].u.values()[j], e[i + 1].u.values()[j]]);
            rhs_l1 += w * rhs[j].abs();
            res_l1 += w * (du - rhs[j]).abs();
        }
        report.max_rhs_l1 = report.max_rhs_l1.max(rhs_l1);
        report.max_residual_l1 = report.max_residual_l1.max(res_l1);
        report.taus.push(taus[1]);
        report.rhs_l1.push(rhs_l1);
        report.residual_l1.push(res_l1);
    }
    Ok(report)
}
