//! Steady states of the renormalized flow: Gaussians (`p = 1`) and
//! Barenblatt profiles (`p ≠ 1`), matched to mass 1 and a prescribed second
//! moment.
//!
//! Barenblatt profiles are
//!
//! ```text
//! p < 1:  B(y) = (C_B + (1-p)/p · |y|²/(2σ))^{1/(p-1)}
//! p > 1:  B(y) = (C_B - (p-1)/p · |y|²/(2σ))_+^{1/(p-1)}
//! ```
//!
//! The pair `(C_B, σ)` is found by damped Newton iteration on the quadrature
//! residuals `(mass - 1, E/E₀ - 1)` of the sampled profile, so the sampled
//! density carries exactly the requested moments on its grid. The starting
//! point is the continuum solution, which is available in closed form
//! through Beta functions.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::density::{Density, PowerTail};
use crate::entropy::SHANNON_WINDOW;
use crate::grid::{unit_sphere_area, Grid};
use crate::math::{ln_beta, Real};
use crate::{check_admissible, Error, Result};

/// Residual tolerance of the moment-matching root finder.
pub const MATCH_TOLERANCE: f64 = 1e-10;

/// Number of standard deviations a Gaussian profile must fit inside the grid.
pub const GAUSSIAN_HALF_WIDTHS: f64 = 6.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileKind {
    Gaussian,
    /// Fast diffusion, `p < 1`: positive with algebraic tails.
    BarenblattFd,
    /// Porous medium, `p > 1`: compact support.
    BarenblattPme,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyProfile {
    pub p: f64,
    pub n: usize,
    /// Profile constant; the normalization `(2πσ)^{-n/2}` for Gaussians.
    pub c_b: f64,
    pub sigma: f64,
    /// Self-similarity exponent `λ = 2 - n(1 - p)`.
    pub lambda: f64,
    /// Second moment the profile was matched to.
    pub e0: f64,
    pub kind: ProfileKind,
}

fn kind_for(p: f64) -> ProfileKind {
    if (p - 1.0).abs() <= SHANNON_WINDOW {
        ProfileKind::Gaussian
    } else if p < 1.0 {
        ProfileKind::BarenblattFd
    } else {
        ProfileKind::BarenblattPme
    }
}

impl SteadyProfile {
    fn with_params(p: f64, n: usize, c_b: f64, sigma: f64, e0: f64) -> Self {
        let kind = kind_for(p);
        let p = if kind == ProfileKind::Gaussian { 1.0 } else { p };
        SteadyProfile { p, n, c_b, sigma, lambda: 2.0 - n as f64 * (1.0 - p), e0, kind }
    }

    /// Coefficient `κ = |p-1| / (2pσ)` of `|y|²` in `B^{p-1}`.
    fn kappa(&self) -> f64 {
        (self.p - 1.0).abs() / (2.0 * self.p * self.sigma)
    }

    /// Closed-form value at radius `r`.
    pub fn value(&self, r: f64) -> f64 {
        match self.kind {
            ProfileKind::Gaussian => self.c_b * (-r * r / (2.0 * self.sigma)).exp(),
            ProfileKind::BarenblattFd => (self.c_b + self.kappa() * r * r).powf(1.0 / (self.p - 1.0)),
            ProfileKind::BarenblattPme => {
                let base = self.c_b - self.kappa() * r * r;
                if base > 0.0 {
                    base.powf(1.0 / (self.p - 1.0))
                } else {
                    0.0
                }
            }
        }
    }

    /// Power-law tail of fast-diffusion profiles.
    pub fn tail(&self) -> Option<PowerTail> {
        (self.kind == ProfileKind::BarenblattFd).then(|| PowerTail {
            scale: 1.0,
            offset: self.c_b,
            slope: self.kappa(),
            exponent: 1.0 / (1.0 - self.p),
        })
    }

    /// Radius of the free boundary for `p > 1`.
    pub fn support_radius(&self) -> Option<f64> {
        (self.kind == ProfileKind::BarenblattPme).then(|| (self.c_b / self.kappa()).sqrt())
    }

    /// Radius needed on a grid to hold the profile: the free boundary for
    /// `p > 1`, six standard deviations for Gaussians. Fast-diffusion
    /// profiles carry their tail analytically and fit any grid.
    pub fn required_extent(&self) -> f64 {
        match self.kind {
            ProfileKind::Gaussian => GAUSSIAN_HALF_WIDTHS * self.sigma.sqrt(),
            ProfileKind::BarenblattPme => (self.c_b / self.kappa()).sqrt(),
            ProfileKind::BarenblattFd => 0.0,
        }
    }

    /// Closed-form dilation `a^n B(a y)`; stays in the family with
    /// `σ → σ a^{-λ}` and `C_B → a^{n(p-1)} C_B`.
    pub fn dilated(&self, a: f64) -> SteadyProfile {
        let n = self.n as f64;
        let (c_b, sigma) = match self.kind {
            ProfileKind::Gaussian => (self.c_b * a.powf(n), self.sigma / (a * a)),
            _ => (self.c_b * a.powf(n * (self.p - 1.0)), self.sigma * a.powf(-self.lambda)),
        };
        SteadyProfile { c_b, sigma, e0: self.e0 / (a * a), ..*self }
    }

    /// The constants `(A, C)` of the time-dependent fast-diffusion
    /// Barenblatt `(C t / (|x|² + A t^{2/λ}))^{1/(1-p)}` whose `t = 1` slice
    /// is this profile. Display values only.
    pub fn zkb_constants(&self) -> Option<(f64, f64)> {
        (self.kind == ProfileKind::BarenblattFd).then(|| {
            let k = self.kappa();
            (self.c_b / k, 1.0 / k)
        })
    }

    /// Ratio between physical time and the self-similar clock of
    /// [`selfsimilar_barenblatt`]: the profile is the slice at physical time
    /// `σ/λ` of the solution of `v_t = Δv^p` started from a point mass.
    pub fn clock_scale(&self) -> f64 {
        self.sigma / self.lambda
    }

    /// Samples the closed form on `grid`, with its analytic tail for `p < 1`.
    pub fn sample(&self, grid: &Arc<Grid>) -> Result<Density> {
        let values = grid.nodes().iter().map(|&x| self.value(x.abs())).collect();
        match self.tail() {
            Some(t) => Density::with_tail(grid.clone(), values, t),
            None => Density::new(grid.clone(), values),
        }
    }

    fn check_fits(&self, grid: &Grid) -> Result<()> {
        let needed = self.required_extent();
        if !(needed <= grid.extent()) {
            return Err(Error::GridTooSmall { needed, extent: grid.extent() });
        }
        Ok(())
    }
}

/// Continuum Barenblatt (or Gaussian) with unit mass and second moment `e0`
/// on `R^n`, from the Beta-function moments of the closed forms.
pub fn continuum_profile(p: f64, n: usize, e0: f64) -> Result<SteadyProfile> {
    check_admissible(p, n)?;
    if !(e0.is_finite() && e0 > 0.0) {
        return Err(Error::NonPositiveEnergy(e0));
    }
    let nf = n as f64;
    let half_area = 0.5 * unit_sphere_area(n);
    let profile = match kind_for(p) {
        ProfileKind::Gaussian => {
            let sigma = e0 / nf;
            SteadyProfile::with_params(1.0, n, (2.0 * core::f64::consts::PI * sigma).powf(-0.5 * nf), sigma, e0)
        }
        ProfileKind::BarenblattPme => {
            // B = C^m (1 - |y|²/R²)_+^m, m = 1/(p-1)
            let m = 1.0 / (p - 1.0);
            let j0 = half_area * ln_beta(0.5 * nf, m + 1.0).exp();
            let j2 = half_area * ln_beta(0.5 * nf + 1.0, m + 1.0).exp();
            let r2 = e0 * j0 / j2;
            let c = (r2.powf(0.5 * nf) * j0).powf(-(p - 1.0));
            let kappa = c / r2;
            SteadyProfile::with_params(p, n, c, (p - 1.0) / (2.0 * p * kappa), e0)
        }
        ProfileKind::BarenblattFd => {
            // B = C^{-m} (1 + |y|²/R²)^{-m}, m = 1/(1-p)
            let m = 1.0 / (1.0 - p);
            let k0 = half_area * ln_beta(0.5 * nf, m - 0.5 * nf).exp();
            let k2 = half_area * ln_beta(0.5 * nf + 1.0, m - 0.5 * nf - 1.0).exp();
            let r2 = e0 * k0 / k2;
            let c = (r2.powf(0.5 * nf) * k0).powf(1.0 - p);
            let kappa = c / r2;
            SteadyProfile::with_params(p, n, c, (1.0 - p) / (2.0 * p * kappa), e0)
        }
    };
    Ok(profile)
}

/// Gaussian `M_σ` with `σ = E₀/n`.
pub fn gaussian_matched(n: usize, e0: f64, grid: &Arc<Grid>) -> Result<(SteadyProfile, Density)> {
    let profile = continuum_profile(1.0, n, e0)?;
    profile.check_fits(grid)?;
    let density = profile.sample(grid)?;
    Ok((profile, density))
}

/// Barenblatt profile with mass 1 and second moment `e0` on `grid`.
pub fn barenblatt_matched(p: f64, n: usize, e0: f64, grid: &Arc<Grid>) -> Result<(SteadyProfile, Density)> {
    let start = continuum_profile(p, n, e0)?;
    if start.kind == ProfileKind::Gaussian {
        return Err(Error::InadmissibleExponent { p, n });
    }
    match_from(start, e0, grid)
}

/// [`barenblatt_matched`] from a caller-provided starting point `(C_B, σ)`.
pub fn barenblatt_matched_from(
    p: f64,
    n: usize,
    e0: f64,
    grid: &Arc<Grid>,
    c_b: f64,
    sigma: f64,
) -> Result<(SteadyProfile, Density)> {
    check_admissible(p, n)?;
    if kind_for(p) == ProfileKind::Gaussian {
        return Err(Error::InadmissibleExponent { p, n });
    }
    if !(e0.is_finite() && e0 > 0.0) {
        return Err(Error::NonPositiveEnergy(e0));
    }
    match_from(SteadyProfile::with_params(p, n, c_b, sigma, e0), e0, grid)
}

/// Starting point of the Gaussian limit: `σ₀ = E₀/n` and `C_B` closing the
/// mass at that `σ`.
pub fn gaussian_limit_guess(p: f64, n: usize, e0: f64, grid: &Arc<Grid>) -> Result<(f64, f64)> {
    check_admissible(p, n)?;
    let sigma = e0 / n as f64;
    let mass = |c: f64| -> f64 {
        SteadyProfile::with_params(p, n, c, sigma, e0).sample(grid).map(|d| d.mass()).unwrap_or(f64::NAN)
    };
    // mass is increasing in C_B for p > 1 and decreasing for p < 1
    let increasing = p > 1.0;
    let (mut lo, mut hi) = (-60.0f64, 60.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let m = mass(mid.exp());
        if !m.is_finite() || (m > 1.0) == increasing {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok((libm::exp(0.5 * (lo + hi)), sigma))
}

/// Damped Newton on `(ln C_B, ln σ)` with a forward-difference Jacobian.
fn match_from(start: SteadyProfile, e0: f64, grid: &Arc<Grid>) -> Result<(SteadyProfile, Density)> {
    let (p, n) = (start.p, start.n);
    let residual = |x: [f64; 2]| -> Result<([f64; 2], Density)> {
        let prof = SteadyProfile::with_params(p, n, x[0].exp(), x[1].exp(), e0);
        let d = prof.sample(grid)?;
        Ok(([d.mass() - 1.0, d.energy() / e0 - 1.0], d))
    };
    let norm = |r: [f64; 2]| r[0].abs().max(r[1].abs());

    let mut x = [start.c_b.ln(), start.sigma.ln()];
    let (mut r, _) = residual(x)?;
    let max_iter = 100;
    let mut iterations = 0;
    while norm(r) > 1e-14 && iterations < max_iter {
        iterations += 1;
        let step = 1e-7;
        let mut jac = [[0.0; 2]; 2];
        for j in 0..2 {
            let mut xp = x;
            xp[j] += step;
            let (rp, _) = residual(xp)?;
            jac[0][j] = (rp[0] - r[0]) / step;
            jac[1][j] = (rp[1] - r[1]) / step;
        }
        let det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        if det == 0.0 || !det.is_finite() {
            break;
        }
        let dx = [-(jac[1][1] * r[0] - jac[0][1] * r[1]) / det, -(-jac[1][0] * r[0] + jac[0][0] * r[1]) / det];
        let mut damping = 1.0;
        let mut accepted = false;
        for _ in 0..40 {
            let trial = [x[0] + damping * dx[0], x[1] + damping * dx[1]];
            if let Ok((rt, _)) = residual(trial) {
                if rt[0].is_finite() && rt[1].is_finite() && norm(rt) < norm(r) {
                    x = trial;
                    r = rt;
                    accepted = true;
                    break;
                }
            }
            damping *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    if !(norm(r) <= MATCH_TOLERANCE) {
        return Err(Error::RootFinder { residual: norm(r), iterations });
    }
    let profile = SteadyProfile::with_params(p, n, x[0].exp(), x[1].exp(), e0);
    profile.check_fits(grid)?;
    let density = profile.sample(grid)?;
    Ok((profile, density))
}

/// Gaussian for `|p - 1| ≤ 1e-6`, Barenblatt otherwise.
pub fn matched(p: f64, n: usize, e0: f64, grid: &Arc<Grid>) -> Result<(SteadyProfile, Density)> {
    check_admissible(p, n)?;
    if kind_for(p) == ProfileKind::Gaussian {
        gaussian_matched(n, e0, grid)
    } else {
        barenblatt_matched(p, n, e0, grid)
    }
}

/// Self-similar solution `t^{-n/λ} B(|x| t^{-1/λ})` through `profile` at
/// `t = 1`, i.e. the closed-form dilation by `a = t^{-1/λ}`. The sample is
/// re-matched on `grid` so that it carries mass 1 and second moment
/// `E₀ t^{2/λ}` exactly in quadrature; this moves `(C_B, σ)` by the
/// discretization error only.
///
/// The curve solves `v_s = Δv^p` in physical time `s = t · σ/λ` (see
/// [`SteadyProfile::clock_scale`]).
pub fn selfsimilar_barenblatt(profile: &SteadyProfile, t: f64, grid: &Arc<Grid>) -> Result<Density> {
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::InvalidConfig("self-similar time must be positive"));
    }
    let a = t.powf(-1.0 / profile.lambda);
    let guess = profile.dilated(a);
    guess.check_fits(grid)?;
    if profile.kind == ProfileKind::Gaussian {
        return guess.sample(grid);
    }
    let (_, density) = match_from(guess, guess.e0, grid)?;
    Ok(density)
}

/// Same as [`selfsimilar_barenblatt`] but also returns the re-matched profile.
pub fn selfsimilar_profile(profile: &SteadyProfile, t: f64, grid: &Arc<Grid>) -> Result<(SteadyProfile, Density)> {
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::InvalidConfig("self-similar time must be positive"));
    }
    let guess = profile.dilated(t.powf(-1.0 / profile.lambda));
    guess.check_fits(grid)?;
    if profile.kind == ProfileKind::Gaussian {
        let d = guess.sample(grid)?;
        return Ok((guess, d));
    }
    match_from(guess, guess.e0, grid)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhiReport {
    pub p: f64,
    pub n: usize,
    pub sigmas: Vec<f64>,
    /// `φ_p(σ) = σ ∫ B̄_σ^p`.
    pub phi: Vec<f64>,
    /// `true` when `φ_p` must increase (`p < 1`).
    pub expect_increasing: bool,
    pub strictly_monotone: bool,
}

/// Samples `φ_p(σ) = σ ∫ B̄_σ^p` along the energy-preserving family
/// `B̄_σ(y) = σ^{-(n+2)/2} B̄(y/√σ)` and checks its monotonicity: increasing
/// for `p < 1`, decreasing for `p > 1`.
pub fn phi_monotonicity_check(p: f64, n: usize, grid: &Arc<Grid>, sigmas: &[f64]) -> Result<PhiReport> {
    check_admissible(p, n)?;
    if kind_for(p) == ProfileKind::Gaussian {
        return Err(Error::InadmissibleExponent { p, n });
    }
    let base = continuum_profile(p, n, n as f64)?;
    let nf = n as f64;
    let mut phi = Vec::with_capacity(sigmas.len());
    for &s in sigmas {
        if !(s > 0.0) {
            return Err(Error::InvalidConfig("sigma values must be positive"));
        }
        let amp = s.powf(-0.5 * (nf + 2.0));
        let root = s.sqrt();
        if let Some(r) = base.support_radius() {
            if r * root > grid.extent() {
                return Err(Error::GridTooSmall { needed: r * root, extent: grid.extent() });
            }
        }
        let values = grid.nodes().iter().map(|&x| amp * base.value(x.abs() / root)).collect();
        let density = match base.tail() {
            Some(t) => Density::with_tail(grid.clone(), values, PowerTail { scale: amp, slope: t.slope / s, ..t })?,
            None => Density::new(grid.clone(), values)?,
        };
        phi.push(s * density.lp_integral(p)?);
    }
    let expect_increasing = p < 1.0;
    let strictly_monotone = phi.windows(2).all(|w| if expect_increasing { w[1] > w[0] } else { w[1] < w[0] });
    Ok(PhiReport { p, n, sigmas: sigmas.to_vec(), phi, expect_increasing, strictly_monotone })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(l: f64, pts: usize) -> Arc<Grid> {
        Arc::new(Grid::line(l, pts).unwrap())
    }

    #[test]
    fn continuum_pme_p2() {
        let b = continuum_profile(2.0, 1, 1.0).unwrap();
        assert_eq!(b.kind, ProfileKind::BarenblattPme);
        assert!((b.lambda - 3.0).abs() < 1e-15);
        // R² = 5 for the parabola cap with unit energy
        assert!((b.support_radius().unwrap().powi(2) - 5.0).abs() < 1e-12);
    }

    #[test]
    fn matched_pme_moments() {
        let g = line(4.0, 801);
        let (b, d) = barenblatt_matched(2.0, 1, 1.0, &g).unwrap();
        assert!((d.mass() - 1.0).abs() < 1e-10);
        assert!((d.energy() - 1.0).abs() < 1e-10);
        let c = continuum_profile(2.0, 1, 1.0).unwrap();
        assert!(((b.sigma - c.sigma) / c.sigma).abs() < 1e-3);
    }

    #[test]
    fn matched_fd_moments_with_tail() {
        let g = line(8.0, 801);
        let (_, d) = barenblatt_matched(0.6, 1, 1.0, &g).unwrap();
        assert!(d.tail().is_some());
        assert!((d.mass() - 1.0).abs() < 1e-10);
        assert!((d.energy() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn inadmissible_exponents() {
        let g = line(4.0, 401);
        assert!(matches!(barenblatt_matched(0.3, 1, 1.0, &g), Err(Error::InadmissibleExponent { .. })));
        assert!(matches!(barenblatt_matched(1.0, 1, 1.0, &g), Err(Error::InadmissibleExponent { .. })));
        assert!(matches!(phi_monotonicity_check(1.0, 1, &g, &[0.5, 1.0]), Err(Error::InadmissibleExponent { .. })));
    }

    #[test]
    fn gaussian_needs_room() {
        let g = line(3.0, 301);
        assert!(matches!(gaussian_matched(1, 1.0, &g), Err(Error::GridTooSmall { .. })));
    }

    #[test]
    fn dilated_profile_stays_in_family() {
        let b = continuum_profile(0.75, 1, 1.0).unwrap();
        let d = b.dilated(0.7);
        for &r in &[0.0, 0.3, 1.7, 5.0] {
            let direct = 0.7 * b.value(0.7 * r);
            assert!((d.value(r) - direct).abs() < 1e-14 * direct.max(1e-300));
        }
    }

    #[test]
    fn phi_directions() {
        let g = line(12.0, 1201);
        let fd = phi_monotonicity_check(0.75, 1, &g, &[0.5, 1.0, 2.0]).unwrap();
        assert!(fd.expect_increasing && fd.strictly_monotone, "{fd:?}");
        let pme = phi_monotonicity_check(2.0, 1, &g, &[0.5, 1.0, 2.0]).unwrap();
        assert!(!pme.expect_increasing && pme.strictly_monotone, "{pme:?}");
    }
    fn radial(r: f64, pts: usize) -> Arc<Grid> {
        Arc::new(Grid::radial(3, r, pts).unwrap())
    }

    #[test]
    fn matches_across_exponents_and_dimensions() {
        for &(p, n) in &[(0.6, 1), (0.75, 1), (2.0, 1), (3.0, 1), (0.75, 3), (2.0, 3), (3.0, 3)] {
            let g = if n == 1 { line(25.0, 2001) } else { radial(25.0, 2001) };
            let (b, d) = barenblatt_matched(p, n, 1.0, &g).unwrap();
            assert!((d.mass() - 1.0).abs() < 1e-10, "p={p} n={n}");
            assert!((d.energy() - 1.0).abs() < 1e-10, "p={p} n={n}");
            let c = continuum_profile(p, n, 1.0).unwrap();
            assert!(((b.sigma - c.sigma) / c.sigma).abs() < 1e-3, "p={p} n={n}");
        }
    }

    #[test]
    fn unique_from_two_starts() {
        for &p in &[0.75, 2.0, 3.0] {
            let g = line(25.0, 2001);
            let (a, _) = barenblatt_matched(p, 1, 1.0, &g).unwrap();
            let (c0, s0) = gaussian_limit_guess(p, 1, 1.0, &g).unwrap();
            let (b, _) = barenblatt_matched_from(p, 1, 1.0, &g, c0, s0).unwrap();
            assert!(((a.c_b - b.c_b) / a.c_b).abs() < 1e-8, "p={p}");
            assert!(((a.sigma - b.sigma) / a.sigma).abs() < 1e-8, "p={p}");
        }
    }

    #[test]
    fn converges_to_continuum_under_refinement() {
        let c = continuum_profile(2.0, 1, 1.0).unwrap();
        let errs: Vec<f64> = [201, 401, 801]
            .iter()
            .map(|&k| {
                let (b, _) = barenblatt_matched(2.0, 1, 1.0, &line(4.0, k)).unwrap();
                ((b.sigma - c.sigma) / c.sigma).abs()
            })
            .collect();
        // second order, up to where the free boundary falls between nodes
        assert!(errs[2] < errs[0] / 4.0 && errs[1] < errs[0] / 4.0, "{errs:?}");
        assert!(errs.iter().all(|&e| e < 1e-3));
    }

    #[test]
    fn near_one_close_to_gaussian() {
        // the p = 1.01 free boundary sits near |y| = 14
        let g = line(16.0, 1601);
        let (_, m) = gaussian_matched(1, 1.0, &g).unwrap();
        for &p in &[0.99, 1.01] {
            let (_, b) = barenblatt_matched(p, 1, 1.0, &g).unwrap();
            let top = m.max_value();
            let dev = b.values().iter().zip(m.values()).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
            assert!(dev < 0.02 * top, "p={p} dev={dev}");
        }
    }

    #[test]
    fn selfsimilar_energy_growth() {
        let g = line(20.0, 2001);
        let (b, d1) = barenblatt_matched(2.0, 1, 1.0, &g).unwrap();
        let same = selfsimilar_barenblatt(&b, 1.0, &g).unwrap();
        assert!((same.energy() - d1.energy()).abs() < 1e-10);
        let d8 = selfsimilar_barenblatt(&b, 8.0, &g).unwrap();
        assert!((d8.energy() / d1.energy() - 4.0).abs() < 1e-4);
        assert!((d8.mass() - 1.0).abs() < 1e-8);
        assert!(matches!(selfsimilar_barenblatt(&b, 1e6, &g), Err(Error::GridTooSmall { .. })));
    }

    #[test]
    fn stationarity_relation_on_support() {
        // p/(p-1) ∇B^{p-1} + y/σ = 0
        let g = line(4.0, 801);
        let (b, d) = barenblatt_matched(2.0, 1, 1.0, &g).unwrap();
        let w: Vec<f64> = d.values().iter().map(|v| v.powf(b.p - 1.0)).collect();
        let grad = g.gradient(&w).unwrap();
        let r = b.support_radius().unwrap();
        let h = g.spacing();
        for (i, &x) in g.nodes().iter().enumerate() {
            if x.abs() < r - 2.0 * h {
                let res = b.p / (b.p - 1.0) * grad[i] + x / b.sigma;
                assert!(res.abs() < 1e-4 * d.max_value(), "x={x} res={res}");
            }
        }
    }
}
