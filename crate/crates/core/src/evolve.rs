//! Time evolution of `v_t = Δv^p` and exact reference trajectories.
//!
//! The solver is an explicit finite-volume scheme whose cell volumes are the
//! trapezoid weights of the grid, so the quadrature mass is conserved to
//! rounding. Faces carry the flux `-A (w_{i+1} - w_i)/h` of `w = v^p`, with
//! `A = ω_n r^{n-1}` on radial grids; both ends are no-flux. On radial grids
//! with `n ≥ 2` the node at the origin has zero volume: it takes no flux and
//! is slaved to its neighbours by the even quadratic fit
//! `v_0 = (4 v_1 - v_2)/3`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::density::Density;
use crate::grid::{Grid, GridKind};
use crate::math::Real;
use crate::mixture::GaussianMixture;
use crate::profiles::{self, SteadyProfile};
use crate::{check_admissible, Error, Result};

/// Largest tolerated drift of the quadrature mass during a solve.
pub const MASS_DRIFT_LIMIT: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    ExplicitFv,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub p: f64,
    pub n: usize,
    pub scheme: Scheme,
    /// Safety factor of the time step, in `(0, 1]`.
    pub cfl: f64,
    pub t_end: f64,
    /// Sorted times in `[0, t_end]`; `t = 0` is always recorded.
    pub snapshot_times: Vec<f64>,
    /// Relative floor for `p < 1`: values below `value_floor · max v` are
    /// raised to it.
    pub value_floor: f64,
}

impl SolverConfig {
    pub const DEFAULT_CFL: f64 = 0.4;
    pub const DEFAULT_FLOOR: f64 = 1e-13;

    pub fn new(p: f64, n: usize, t_end: f64, snapshot_times: Vec<f64>) -> Self {
        SolverConfig {
            p,
            n,
            scheme: Scheme::ExplicitFv,
            cfl: Self::DEFAULT_CFL,
            t_end,
            snapshot_times,
            value_floor: Self::DEFAULT_FLOOR,
        }
    }

    /// `count` equally spaced snapshots on `[0, t_end]`, including both ends.
    pub fn uniform(p: f64, n: usize, t_end: f64, count: usize) -> Self {
        let count = count.max(2);
        let times = (0..count).map(|k| t_end * k as f64 / (count - 1) as f64).collect();
        Self::new(p, n, t_end, times)
    }

    pub fn validate(&self) -> Result<()> {
        check_admissible(self.p, self.n)?;
        if !(self.cfl > 0.0 && self.cfl <= 1.0) {
            return Err(Error::InvalidConfig("cfl must lie in (0, 1]"));
        }
        if !(self.t_end.is_finite() && self.t_end >= 0.0) {
            return Err(Error::InvalidConfig("t_end must be nonnegative"));
        }
        if !(self.value_floor >= 0.0 && self.value_floor < 1.0) {
            return Err(Error::InvalidConfig("value_floor must lie in [0, 1)"));
        }
        let in_range = self.snapshot_times.iter().all(|&t| t >= 0.0 && t <= self.t_end);
        let sorted = self.snapshot_times.windows(2).all(|w| w[0] < w[1]);
        if !in_range || !sorted {
            return Err(Error::InvalidConfig("snapshot times must be sorted within [0, t_end]"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Numerical,
    ExactGaussian,
    ExactBarenblatt,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::Numerical => "numerical",
            Provenance::ExactGaussian => "exact-gaussian",
            Provenance::ExactBarenblatt => "exact-barenblatt",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot {
    pub t: f64,
    pub density: Density,
    pub energy: f64,
}

/// Bookkeeping of a numerical solve.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SolveReport {
    pub steps: u64,
    /// Node updates raised to the value floor (`p < 1` only).
    pub floor_hits: u64,
    /// Mass added by the floor; bounds its perturbation of the mass.
    pub floor_mass: f64,
    /// Second moment added by the floor.
    pub floor_energy: f64,
    /// Largest `|mass - mass_0|` seen during the run.
    pub max_mass_drift: f64,
    /// Mass of the analytic tail of `v0` beyond the grid, which the solver
    /// drops before renormalizing the grid values.
    pub dropped_tail_mass: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub config: SolverConfig,
    pub snapshots: Vec<Snapshot>,
    pub provenance: Provenance,
    pub report: SolveReport,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.snapshots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.snapshots.is_empty()
    }

    pub fn times(&self) -> Vec<f64> {
        self.snapshots.iter().map(|s| s.t).collect()
    }

    pub fn masses(&self) -> Vec<f64> {
        self.snapshots.iter().map(|s| s.density.mass()).collect()
    }

    pub fn energies(&self) -> Vec<f64> {
        self.snapshots.iter().map(|s| s.energy).collect()
    }

    pub fn grid(&self) -> Option<&Arc<Grid>> {
        self.snapshots.first().map(|s| s.density.grid())
    }
}

fn snapshot(t: f64, density: Density) -> Snapshot {
    let energy = density.energy();
    Snapshot { t, density, energy }
}

/// Solves `v_t = Δv^p` from `v0` and records `v` at the configured times.
pub fn solve(v0: &Density, config: &SolverConfig) -> Result<Trajectory> {
    config.validate()?;
    if v0.dim() != config.n {
        return Err(Error::GridMismatch);
    }
    crate::entropy::check_normalized(v0)?;
    let grid = v0.grid().clone();
    let len = grid.len();
    let (p, n) = (config.p, config.n);
    let h = grid.spacing();
    let vol = grid.weights();

    let mut v = v0.values().to_vec();
    let on_grid = grid.sum(&v);
    let mut report = SolveReport { dropped_tail_mass: v0.mass() - on_grid, ..Default::default() };
    if v0.tail().is_some() {
        v.iter_mut().for_each(|x| *x /= on_grid);
    }

    let radial = grid.kind() == GridKind::RadialNd;
    let slave = radial && n >= 2;
    let mut area: Vec<f64> =
        (0..len - 1).map(|i| grid.surface_factor(0.5 * (grid.radius(i) + grid.radius(i + 1)))).collect();
    if slave {
        area[0] = 0.0;
    }
    let inv_vol: Vec<f64> = vol.iter().map(|&w| if w > 0.0 { 1.0 / w } else { 0.0 }).collect();
    let nodes = grid.nodes();

    let apply_floor = |v: &mut [f64], report: &mut SolveReport| {
        if p >= 1.0 {
            return;
        }
        let top = v.iter().cloned().fold(0.0, f64::max);
        let floor = config.value_floor * top;
        for (i, x) in v.iter_mut().enumerate() {
            if *x < floor {
                let added = floor - *x;
                report.floor_hits += 1;
                report.floor_mass += vol[i] * added;
                report.floor_energy += vol[i] * nodes[i] * nodes[i] * added;
                *x = floor;
            }
        }
    };
    apply_floor(&mut v, &mut report);
    let mass0 = grid.sum(&v);

    let mut targets: Vec<f64> = config.snapshot_times.clone();
    if targets.first() != Some(&0.0) {
        targets.insert(0, 0.0);
    }

    let mut snapshots = Vec::with_capacity(targets.len());
    snapshots.push(snapshot(0.0, Density::new(grid.clone(), v.clone())?));

    let mut w = alloc::vec![0.0; len];
    let mut flux = alloc::vec![0.0; len - 1];
    let mut t = 0.0;
    for &target in &targets[1..] {
        while t < target {
            // w = v^p and the largest diffusivity p v^{p-1}
            let diffusivity = if p == 1.0 {
                w.copy_from_slice(&v);
                1.0
            } else {
                let mut extreme = if p > 1.0 { 0.0 } else { f64::INFINITY };
                for (wi, &vi) in w.iter_mut().zip(&v) {
                    *wi = if p == 2.0 { vi * vi } else { vi.powf(p) };
                    if p > 1.0 {
                        extreme = f64::max(extreme, vi);
                    } else if vi > 0.0 {
                        extreme = f64::min(extreme, vi);
                    }
                }
                p * extreme.powf(p - 1.0)
            };
            let mut dt = config.cfl * h * h / (2.0 * n as f64 * diffusivity.max(f64::MIN_POSITIVE));
            let last = t + dt >= target * (1.0 - 1e-14) - 1e-300;
            if last {
                dt = target - t;
            }
            for i in 0..len - 1 {
                flux[i] = -area[i] * (w[i + 1] - w[i]) / h;
            }
            v[0] -= dt * inv_vol[0] * flux[0];
            for i in 1..len - 1 {
                v[i] += dt * inv_vol[i] * (flux[i - 1] - flux[i]);
            }
            v[len - 1] += dt * inv_vol[len - 1] * flux[len - 2];
            if slave {
                v[0] = ((4.0 * v[1] - v[2]) / 3.0).max(0.0);
            }
            apply_floor(&mut v, &mut report);
            report.steps += 1;
            t = if last { target } else { t + dt };

            let drift = (grid.sum(&v) - mass0).abs();
            report.max_mass_drift = report.max_mass_drift.max(drift);
            if !(drift <= MASS_DRIFT_LIMIT) {
                return Err(Error::MassDrift(drift));
            }
        }
        snapshots.push(snapshot(target, Density::new(grid.clone(), v.clone())?));
    }

    Ok(Trajectory { config: config.clone(), snapshots, provenance: Provenance::Numerical, report })
}

/// Heat flow of a Gaussian mixture, sampled at `times`.
pub fn exact_heat(mixture: &GaussianMixture, grid: &Arc<Grid>, times: &[f64]) -> Result<Trajectory> {
    let t_end = times.iter().cloned().fold(0.0, f64::max);
    let config = SolverConfig::new(1.0, mixture.dim(), t_end, times.to_vec());
    config.validate()?;
    let snapshots =
        times.iter().map(|&t| Ok(snapshot(t, mixture.heat_evolved(t).sample(grid)?))).collect::<Result<Vec<_>>>()?;
    Ok(Trajectory { config, snapshots, provenance: Provenance::ExactGaussian, report: SolveReport::default() })
}

/// Self-similar solution of `v_t = Δv^p` whose `t = 0` slice is `profile`,
/// sampled at `times`. Physical time `t` corresponds to self-similar time
/// `1 + t / profile.clock_scale()`.
pub fn exact_barenblatt(profile: &SteadyProfile, grid: &Arc<Grid>, times: &[f64]) -> Result<Trajectory> {
    let t_end = times.iter().cloned().fold(0.0, f64::max);
    let config = SolverConfig::new(profile.p, profile.n, t_end, times.to_vec());
    config.validate()?;
    let scale = profile.clock_scale();
    let snapshots = times
        .iter()
        .map(|&t| {
            let d = profiles::selfsimilar_barenblatt(profile, 1.0 + t / scale, grid)?;
            Ok(snapshot(t, d))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Trajectory { config, snapshots, provenance: Provenance::ExactBarenblatt, report: SolveReport::default() })
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnergyRateReport {
    /// Interior snapshot times.
    pub times: Vec<f64>,
    /// Finite-difference `dE/dt`.
    pub measured: Vec<f64>,
    /// `2n ∫ v^p`.
    pub predicted: Vec<f64>,
    pub max_relative_mismatch: f64,
}

/// Derivative at `x1` of the parabola through three points.
pub(crate) fn three_point_derivative(x: [f64; 3], y: [f64; 3]) -> f64 {
    let (h0, h1) = (x[1] - x[0], x[2] - x[1]);
    -h1 / (h0 * (h0 + h1)) * y[0] + (h1 - h0) / (h0 * h1) * y[1] + h0 / (h1 * (h0 + h1)) * y[2]
}

/// Compares the energy law `dE/dt = 2n ∫ v^p` at interior snapshots.
pub fn energy_rate_check(traj: &Trajectory) -> Result<EnergyRateReport> {
    let k = traj.len();
    if k < 3 {
        return Err(Error::TooFewSnapshots { needed: 3, found: k });
    }
    let (p, n) = (traj.config.p, traj.config.n as f64);
    let s = &traj.snapshots;
    let mut report =
        EnergyRateReport { times: Vec::new(), measured: Vec::new(), predicted: Vec::new(), max_relative_mismatch: 0.0 };
    for i in 1..k - 1 {
        let measured =
            three_point_derivative([s[i - 1].t, s[i].t, s[i + 1].t], [s[i - 1].energy, s[i].energy, s[i + 1].energy]);
        let predicted = 2.0 * n * s[i].density.lp_integral(p)?;
        let mismatch = (measured - predicted).abs() / predicted;
        report.max_relative_mismatch = report.max_relative_mismatch.max(mismatch);
        report.times.push(s[i].t);
        report.measured.push(measured);
        report.predicted.push(predicted);
    }
    Ok(report)
}

/// `∫ |f - g|` between two snapshots on the same grid.
pub fn l1_error(f: &Density, g: &Density) -> Result<f64> {
    crate::entropy::l1_distance(f, g)
}
