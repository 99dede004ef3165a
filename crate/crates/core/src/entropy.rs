//! Entropy and information functionals of a [`Density`].
//!
//! Integrals run over the numerical support `{f > floor}` (see
//! [`Density::support_floor`]) plus the analytic tail when the density has
//! one. Fisher informations use central differences and keep a node only
//! when its whole stencil lies inside the support; the dropped boundary
//! layer is reported by [`fisher_estimate`].

use alloc::vec::Vec;

use crate::density::Density;
use crate::grid::GridKind;
use crate::math::Real;
use crate::profiles::{self, SteadyProfile};
use crate::{check_admissible, Error, Result};

/// Half-width of the window around `p = 1` that dispatches to Shannon forms.
pub const SHANNON_WINDOW: f64 = 1e-6;

/// Tolerance on mass and mean for densities that must be normalized.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-6;

#[inline]
fn is_shannon(p: f64) -> bool {
    (p - 1.0).abs() <= SHANNON_WINDOW
}

fn check_exponent(p: f64) -> Result<()> {
    if !(p.is_finite() && p > 0.0) {
        return Err(Error::InvalidExponent(p));
    }
    Ok(())
}

/// Shannon entropy `-∫ f log f`.
pub fn shannon(f: &Density) -> Result<f64> {
    let floor = f.support_floor();
    let g = f.grid();
    let on_grid: f64 =
        g.weights().iter().zip(f.values()).filter(|(_, &v)| v > floor).map(|(w, &v)| -w * v * v.ln()).sum();
    let tail = match f.tail() {
        Some(t) => f.outer_integral(|_, v, _| if v > 0.0 { -v * v.ln() } else { 0.0 }, 2.0 * t.exponent)?,
        None => 0.0,
    };
    Ok(on_grid + tail)
}

/// Rényi entropy `R_p = log(∫ f^p) / (1 - p)`; Shannon for `|p - 1| ≤ 1e-6`.
pub fn renyi(f: &Density, p: f64) -> Result<f64> {
    check_exponent(p)?;
    if f.mass() <= 0.0 {
        return Err(Error::ZeroMass);
    }
    if is_shannon(p) {
        return shannon(f);
    }
    Ok(f.lp_integral(p)?.ln() / (1.0 - p))
}

/// Value and dropped boundary layer of a Fisher-type integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FisherEstimate {
    pub value: f64,
    /// Integrand summed over support nodes excluded because their stencil
    /// leaves the support; a bound on the discretization error from kinks.
    pub boundary_layer: f64,
}

/// `Σ w_i · |∇w|_i² / f_i` over nodes whose stencil is inside the support.
fn fisher_sum(f: &Density, w: &[f64]) -> Result<FisherEstimate> {
    let g = f.grid();
    let mut grad = g.gradient(w)?;
    if g.kind() == GridKind::RadialNd {
        grad[0] = 0.0;
    }
    let floor = f.support_floor();
    let v = f.values();
    let len = v.len();
    let inside = |i: usize| v[i] > floor;
    let stencil_inside = |i: usize| -> bool {
        let (lo, hi) = match (i, g.kind()) {
            (0, GridKind::RadialNd) => (0, 1),
            (0, GridKind::Line1D) => (0, 2),
            (i, _) if i == len - 1 => (len - 3, len - 1),
            (i, _) => (i - 1, i + 1),
        };
        (lo..=hi).all(inside)
    };
    let mut value = 0.0;
    let mut boundary_layer = 0.0;
    for (i, (&wt, &gr)) in g.weights().iter().zip(&grad).enumerate() {
        if !inside(i) {
            continue;
        }
        let term = wt * gr * gr / v[i];
        if stencil_inside(i) {
            value += term;
        } else {
            boundary_layer += term;
        }
    }
    Ok(FisherEstimate { value, boundary_layer })
}

/// Fisher information `∫_{f>0} |∇f|² / f` with its boundary layer.
pub fn fisher_estimate(f: &Density) -> Result<FisherEstimate> {
    let mut est = fisher_sum(f, f.values())?;
    if let Some(t) = f.tail() {
        // far tail values underflow to zero
        let ratio = |_, v: f64, dv: f64| if v > 0.0 { dv * dv / v } else { 0.0 };
        est.value += f.outer_integral(ratio, 2.0 * t.exponent + 2.0)?;
    }
    Ok(est)
}

/// Fisher information `I(f) = ∫_{f>0} |∇f|² / f`.
pub fn fisher(f: &Density) -> Result<f64> {
    Ok(fisher_estimate(f)?.value)
}

/// Generalized Fisher information `I_p(f) = ∫_{f>0} |∇f^p|² / f / ∫ f^p`,
/// with its boundary layer on the same scale.
pub fn fisher_p_estimate(f: &Density, p: f64) -> Result<FisherEstimate> {
    check_admissible(p, f.dim())?;
    if is_shannon(p) {
        return fisher_estimate(f);
    }
    let w: Vec<f64> = f.values().iter().map(|v| v.powf(p)).collect();
    let mut est = fisher_sum(f, &w)?;
    if let Some(t) = f.tail() {
        let decay = 2.0 * t.exponent * (2.0 * p - 1.0) + 2.0;
        est.value += f.outer_integral(
            |_, v, dv| {
                if !(v > 0.0) {
                    return 0.0;
                }
                let dw = p * v.powf(p - 1.0) * dv;
                dw * dw / v
            },
            decay,
        )?;
    }
    let norm = f.lp_integral(p)?;
    Ok(FisherEstimate { value: est.value / norm, boundary_layer: est.boundary_layer / norm })
}

/// Generalized Fisher information `I_p`; equals [`fisher`] at `p = 1`.
pub fn fisher_p(f: &Density, p: f64) -> Result<f64> {
    Ok(fisher_p_estimate(f, p)?.value)
}

/// Checks mass 1 and mean 0 within [`NORMALIZATION_TOLERANCE`].
pub fn check_normalized(f: &Density) -> Result<()> {
    let scale = f.energy().sqrt().max(1.0);
    if (f.mass() - 1.0).abs() > NORMALIZATION_TOLERANCE || f.mean().abs() > NORMALIZATION_TOLERANCE * scale {
        return Err(Error::NotNormalized { mass: f.mass(), mean: f.mean() });
    }
    Ok(())
}

/// The steady profile `B_{σ(f)}` with the second moment of `f`, sampled on
/// the grid of `f`: a Gaussian for `p = 1`, a Barenblatt otherwise.
pub fn matched_reference(f: &Density, p: f64) -> Result<(SteadyProfile, Density)> {
    check_admissible(p, f.dim())?;
    check_normalized(f)?;
    if f.energy() <= 0.0 {
        return Err(Error::ZeroEnergy);
    }
    profiles::matched(p, f.dim(), f.energy(), f.grid())
}

/// `Ĥ_p(f) = R_p(B_{σ(f)}) - R_p(f)`; at `p = 1` the Shannon relative
/// entropy against the Gaussian with the same second moment.
pub fn relative_renyi_hat(f: &Density, p: f64) -> Result<f64> {
    let (_, b) = matched_reference(f, p)?;
    relative_renyi_hat_against(f, &b, p)
}

/// `Ĥ_p` against a precomputed reference `b`.
pub fn relative_renyi_hat_against(f: &Density, b: &Density, p: f64) -> Result<f64> {
    Ok(renyi(b, p)? - renyi(f, p)?)
}

fn check_pair(f: &Density, g: &Density) -> Result<()> {
    if !f.same_grid(g) {
        return Err(Error::GridMismatch);
    }
    Ok(())
}

/// Nodes where `f` is in its support but `g` vanishes make the relative
/// entropies undefined.
fn check_support(f: &Density, g: &Density) -> Result<()> {
    let floor = f.support_floor();
    let bad = f.values().iter().zip(g.values()).any(|(&a, &b)| a > floor && b <= 0.0);
    if bad || (f.tail().is_some() && g.tail().is_none()) {
        return Err(Error::RelativeEntropyUndefined);
    }
    Ok(())
}

/// Shannon relative entropy `∫ f log(f/g)`.
pub fn relative_shannon(f: &Density, g: &Density) -> Result<f64> {
    check_pair(f, g)?;
    check_support(f, g)?;
    let floor = f.support_floor();
    let on_grid: f64 = f
        .grid()
        .weights()
        .iter()
        .zip(f.values().iter().zip(g.values()))
        .filter(|(_, (&a, _))| a > floor)
        .map(|(w, (&a, &b))| w * a * (a / b).ln())
        .sum();
    let tail = match f.tail() {
        Some(t) => f.outer_pair_integral(
            g,
            |_, a, b| if a > 0.0 && b > 0.0 { a * (a / b).ln() } else { 0.0 },
            2.0 * t.exponent,
        )?,
        None => 0.0,
    };
    Ok(on_grid + tail)
}

/// Two-density relative Rényi entropy
/// `H_p(f|g) = log∫f^p/(p-1) + log∫g^p - p/(p-1) · log∫g^{p-1} f`;
/// the Shannon relative entropy for `|p - 1| ≤ 1e-6`.
pub fn relative_renyi(f: &Density, g: &Density, p: f64) -> Result<f64> {
    check_admissible(p, f.dim())?;
    if is_shannon(p) {
        return relative_shannon(f, g);
    }
    check_pair(f, g)?;
    check_support(f, g)?;
    let floor = f.support_floor();
    let cross_grid: f64 = f
        .grid()
        .weights()
        .iter()
        .zip(f.values().iter().zip(g.values()))
        .filter(|(_, (&a, _))| a > floor)
        .map(|(w, (&a, &b))| w * b.powf(p - 1.0) * a)
        .sum();
    let cross_tail = match (f.tail(), g.tail()) {
        (Some(tf), Some(tg)) => f.outer_pair_integral(
            g,
            |_, a, b| if a > 0.0 && b > 0.0 { b.powf(p - 1.0) * a } else { 0.0 },
            2.0 * tg.exponent * (p - 1.0) + 2.0 * tf.exponent,
        )?,
        _ => 0.0,
    };
    let cross = cross_grid + cross_tail;
    if !(cross > 0.0 && cross.is_finite()) {
        return Err(Error::RelativeEntropyUndefined);
    }
    let q = p / (p - 1.0);
    Ok(f.lp_integral(p)?.ln() / (p - 1.0) + g.lp_integral(p)?.ln() - q * cross.ln())
}

/// Pointwise integrand of `F_p`: the convexity gap of `s ↦ s^p/(p-1)`.
#[inline]
fn ralston_gap(a: f64, b: f64, p: f64) -> f64 {
    let bp = if b > 0.0 { b.powf(p) } else { 0.0 };
    let ap = if a > 0.0 { a.powf(p) } else { 0.0 };
    let lin = if b > 0.0 { p * b.powf(p - 1.0) * (a - b) } else { 0.0 };
    (ap - bp - lin) / (p - 1.0)
}

/// Newton–Ralston relative entropy
/// `F_p(f|B) = ∫ [f^p - B^p - p B^{p-1}(f - B)] / (p-1)`; at `p = 1` its
/// limit `∫ [f log(f/B) - f + B]`.
pub fn ralston(f: &Density, b: &Density, p: f64) -> Result<f64> {
    check_admissible(p, f.dim())?;
    check_pair(f, b)?;
    let floor = f.support_floor();
    if p < 1.0 || is_shannon(p) {
        if let Some(index) = f.values().iter().zip(b.values()).position(|(&a, &r)| a > floor && r <= 0.0) {
            return Err(Error::NonPositiveReference { index });
        }
    }
    let g = f.grid();
    if is_shannon(p) {
        let gap = |a: f64, r: f64| if a > 0.0 { a * (a / r).ln() - a + r } else { r };
        let on_grid: f64 = g
            .weights()
            .iter()
            .zip(f.values().iter().zip(b.values()))
            .map(|(w, (&a, &r))| if a > floor { w * gap(a, r) } else { w * r })
            .sum();
        let tail = match b.tail() {
            Some(t) => b.outer_pair_integral(f, |_, r, a| gap(a, r), 2.0 * t.exponent)?,
            None => 0.0,
        };
        return Ok(on_grid + tail);
    }
    let on_grid: f64 = g
        .weights()
        .iter()
        .zip(f.values().iter().zip(b.values()))
        .map(|(w, (&a, &r))| w * ralston_gap(if a > floor { a } else { 0.0 }, r, p))
        .sum();
    let decay = |t: &crate::PowerTail| 2.0 * t.exponent * p;
    let tail = match (b.tail(), f.tail()) {
        (Some(t), _) => b.outer_pair_integral(f, |_, r, a| ralston_gap(a, r, p), decay(t))?,
        (None, Some(t)) => f.outer_integral(|_, a, _| ralston_gap(a, 0.0, p), decay(t))?,
        (None, None) => 0.0,
    };
    Ok(on_grid + tail)
}

/// `∫ |f - g|`.
pub fn l1_distance(f: &Density, g: &Density) -> Result<f64> {
    check_pair(f, g)?;
    let on_grid: f64 =
        f.grid().weights().iter().zip(f.values().iter().zip(g.values())).map(|(w, (a, b))| w * (a - b).abs()).sum();
    let decay = f.tail().or(g.tail()).map_or(0.0, |t| 2.0 * t.exponent);
    Ok(on_grid + f.outer_pair_integral(g, |_, a, b| (a - b).abs(), decay)?)
}

/// Entropy powers `N = exp(2R/n)` and `N_p = exp((2/n + p - 1) R_p)`.
pub fn entropy_powers(f: &Density, p: f64) -> Result<(f64, f64)> {
    check_admissible(p, f.dim())?;
    let n = f.dim() as f64;
    let r = shannon(f)?;
    let big_n = (2.0 * r / n).exp();
    if is_shannon(p) {
        return Ok((big_n, big_n));
    }
    let rp = renyi(f, p)?;
    Ok((big_n, ((2.0 / n + p - 1.0) * rp).exp()))
}

/// Rényi entropy power `N_p` alone.
pub fn renyi_power(f: &Density, p: f64) -> Result<f64> {
    check_admissible(p, f.dim())?;
    let n = f.dim() as f64;
    let exponent = if is_shannon(p) { 2.0 / n } else { 2.0 / n + p - 1.0 };
    Ok((exponent * renyi(f, p)?).exp())
}

/// Dilation-invariant functional `Λ_p = R_p - (n/2) log E`.
pub fn lambda_p(f: &Density, p: f64) -> Result<f64> {
    check_admissible(p, f.dim())?;
    if !(f.energy() > 0.0) {
        return Err(Error::ZeroEnergy);
    }
    Ok(renyi(f, p)? - 0.5 * f.dim() as f64 * f.energy().ln())
}

/// All functionals evaluated on one density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyReport {
    pub p: f64,
    pub r_p: f64,
    pub shannon: f64,
    pub fisher: f64,
    pub fisher_p: f64,
    /// `Ĥ_p(f)` against the moment-matched profile.
    pub h_hat_p: f64,
    /// `H_p(f|g)`, present when a reference `g` was supplied.
    pub h_p_rel: Option<f64>,
    /// `F_p(f|B)` against the moment-matched profile.
    pub f_p: f64,
    pub entropy_power: f64,
    pub renyi_power: f64,
    pub lambda_p: f64,
}

impl EntropyReport {
    /// Column order of [`EntropyReport::row`].
    pub const COLUMNS: [&'static str; 11] =
        ["p", "R_p", "shannon", "I", "I_p", "H_hat_p", "H_p_rel", "F_p", "N", "N_p", "Lambda_p"];

    /// Evaluates every functional on a normalized `f`. The matched profile
    /// is built once and shared by `Ĥ_p` and `F_p`.
    pub fn evaluate(f: &Density, p: f64, reference: Option<&Density>) -> Result<Self> {
        let (_, b) = matched_reference(f, p)?;
        let (big_n, big_np) = entropy_powers(f, p)?;
        Ok(EntropyReport {
            p,
            r_p: renyi(f, p)?,
            shannon: shannon(f)?,
            fisher: fisher(f)?,
            fisher_p: fisher_p(f, p)?,
            h_hat_p: relative_renyi_hat_against(f, &b, p)?,
            h_p_rel: reference.map(|g| relative_renyi(f, g, p)).transpose()?,
            f_p: ralston(f, &b, p)?,
            entropy_power: big_n,
            renyi_power: big_np,
            lambda_p: lambda_p(f, p)?,
        })
    }

    /// Values in [`EntropyReport::COLUMNS`] order; `None` for an absent
    /// `H_p_rel`.
    pub fn row(&self) -> [Option<f64>; 11] {
        [
            Some(self.p),
            Some(self.r_p),
            Some(self.shannon),
            Some(self.fisher),
            Some(self.fisher_p),
            Some(self.h_hat_p),
            self.h_p_rel,
            Some(self.f_p),
            Some(self.entropy_power),
            Some(self.renyi_power),
            Some(self.lambda_p),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;
    use crate::profiles::{barenblatt_matched, gaussian_matched};
    use alloc::sync::Arc;
    use core::f64::consts::{E, PI};

    fn line(l: f64, pts: usize) -> Arc<Grid> {
        Arc::new(Grid::line(l, pts).unwrap())
    }

    fn gaussian(g: &Arc<Grid>, var: f64, mu: f64) -> Density {
        Density::from_fn(g.clone(), |x| (-(x - mu) * (x - mu) / (2.0 * var)).exp() / (2.0 * PI * var).sqrt()).unwrap()
    }

    fn bump_mix(g: &Arc<Grid>) -> Density {
        let a = gaussian(g, 0.3, -1.0);
        let b = gaussian(g, 0.5, 1.0);
        let v = a.values().iter().zip(b.values()).map(|(x, y)| 0.5 * (x + y)).collect();
        Density::new(g.clone(), v).unwrap().normalize(1.0).unwrap()
    }

    #[test]
    fn steep_tails_underflow_cleanly() {
        // p = 0.9 decays like r^{-20}; far tail values are exactly zero
        let g = line(40.0, 801);
        let (b, f) = barenblatt_matched(0.9, 1, 1.0, &g).unwrap();
        let ip = fisher_p(&f, 0.9).unwrap();
        assert!((ip * b.sigma - 1.0).abs() < 1e-3, "{ip}");
        assert!(fisher(&f).unwrap().is_finite());
    }

    #[test]
    fn uniform_density_entropies() {
        let g = line(2.0, 401);
        // indicator of [-1/2, 1/2] with half-weight ends, mass exactly 1
        let f = Density::from_fn(g.clone(), |x| if x.abs() <= 0.5 + 1e-12 { 1.0 } else { 0.0 }).unwrap();
        let f = f.scaled(1.0 / f.mass()).unwrap();
        for &p in &[0.5, 1.0, 2.0, 3.0] {
            assert!(renyi(&f, p).unwrap().abs() < 1e-2, "p={p}");
        }
    }

    #[test]
    fn gaussian_shannon_and_fisher() {
        let g = line(10.0, 2001);
        let m = gaussian(&g, 1.0, 0.0);
        assert!((shannon(&m).unwrap() - 0.5 * (2.0 * PI * E).ln()).abs() < 1e-6);
        assert!((fisher(&m).unwrap() - 1.0).abs() < 1e-4);
        let m2 = gaussian(&g, 2.0, 0.0);
        assert!((fisher(&m2).unwrap() - 0.5).abs() < 1e-3 * 0.5);
        let (big_n, big_np) = entropy_powers(&m2, 1.0).unwrap();
        assert!((big_n / (2.0 * PI * 2.0 * E) - 1.0).abs() < 1e-3);
        assert_eq!(big_n, big_np);
    }

    #[test]
    fn renyi_continuity_at_one() {
        let g = line(10.0, 2001);
        let f = bump_mix(&g);
        let a = renyi(&f, 0.999).unwrap();
        let b = renyi(&f, 1.0).unwrap();
        assert!((a - b).abs() < 1e-3);
        assert!((fisher_p(&f, 1.0).unwrap() - fisher(&f).unwrap()).abs() < 1e-8);
    }

    #[test]
    fn fisher_scales_under_dilation() {
        let g = line(12.0, 2401);
        let m = gaussian(&g, 1.0, 0.0);
        let i = fisher(&m).unwrap();
        let d = m.dilate(2.0).unwrap();
        assert!((fisher(&d).unwrap() / i - 4.0).abs() < 4e-3);
    }

    #[test]
    fn barenblatt_fisher_identity() {
        for &(p, l) in &[(0.75, 25.0), (2.0, 4.0), (3.0, 4.0)] {
            let g = line(l, 2001);
            let (b, d) = barenblatt_matched(p, 1, 1.0, &g).unwrap();
            let ip = fisher_p(&d, p).unwrap();
            assert!((ip * b.sigma - 1.0).abs() < 1e-3, "p={p} I_p σ={}", ip * b.sigma);
            let ratio = ip / d.lp_integral(p).unwrap();
            assert!((ratio - 1.0).abs() < 1e-3, "p={p} ratio={ratio}");
        }
    }

    #[test]
    fn hat_vanishes_on_profile_and_positive_elsewhere() {
        let g = line(25.0, 2001);
        for &p in &[0.75, 1.0, 2.0] {
            let (_, b) = if p == 1.0 {
                gaussian_matched(1, 1.0, &g).unwrap()
            } else {
                barenblatt_matched(p, 1, 1.0, &g).unwrap()
            };
            assert!(relative_renyi_hat(&b, p).unwrap().abs() < 1e-8, "p={p}");
            let f = bump_mix(&g);
            assert!(relative_renyi_hat(&f, p).unwrap() > 1e-4, "p={p}");
        }
    }

    #[test]
    fn hat_equals_two_density_form_below_one() {
        let g = line(25.0, 2001);
        let f = bump_mix(&g);
        let (_, b) = matched_reference(&f, 0.75).unwrap();
        let h = relative_renyi_hat(&f, 0.75).unwrap();
        let h2 = relative_renyi(&f, &b, 0.75).unwrap();
        assert!((h - h2).abs() < 1e-8, "{h} {h2}");
    }

    #[test]
    fn relative_renyi_brackets_shannon() {
        let g = line(10.0, 2001);
        let f = bump_mix(&g);
        let m = gaussian(&g, 1.0, 0.0);
        assert!(relative_renyi(&f, &f, 0.8).unwrap().abs() < 1e-10);
        let h = relative_shannon(&f, &m).unwrap();
        let lo = relative_renyi(&f, &m, 0.99).unwrap();
        let hi = relative_renyi(&f, &m, 1.01).unwrap();
        assert!(lo.min(hi) - 1e-2 <= h && h <= lo.max(hi) + 1e-2);
    }

    #[test]
    fn undefined_outside_support() {
        let g = line(6.0, 601);
        let (_, b) = barenblatt_matched(2.0, 1, 0.5, &g).unwrap();
        let f = gaussian(&g, 1.0, 0.0);
        assert_eq!(relative_renyi(&f, &b, 2.0), Err(Error::RelativeEntropyUndefined));
        assert!(matches!(ralston(&f, &b, 0.75), Err(Error::NonPositiveReference { .. })));
    }

    #[test]
    fn ralston_zero_on_itself_and_bounded() {
        let g = line(25.0, 2001);
        let f = bump_mix(&g);
        for &p in &[0.75, 2.0] {
            let (_, b) = matched_reference(&f, p).unwrap();
            assert!(ralston(&b, &b, p).unwrap().abs() < 1e-14);
            let fp = ralston(&f, &b, p).unwrap();
            let h = relative_renyi_hat(&f, p).unwrap();
            let bound = if p < 1.0 { b.lp_integral(p).unwrap() } else { f.lp_integral(p).unwrap() };
            assert!(fp >= 0.0 && fp <= bound * h + 1e-8, "p={p} F={fp} bound={}", bound * h);
        }
    }

    #[test]
    fn lambda_invariant_and_maximal() {
        let g = line(25.0, 2001);
        let f = bump_mix(&g);
        for &p in &[0.75, 1.0, 2.0] {
            let l = lambda_p(&f, p).unwrap();
            for &a in &[0.5, 2.0] {
                let la = lambda_p(&f.dilate(a).unwrap(), p).unwrap();
                assert!((la - l).abs() < 1e-6, "p={p} a={a} {}", la - l);
            }
            let (_, b) = matched_reference(&f, p).unwrap();
            assert!(l <= lambda_p(&b, p).unwrap() + 1e-8);
        }
    }

    #[test]
    fn report_row_order() {
        let g = line(25.0, 2001);
        let f = bump_mix(&g);
        let r = EntropyReport::evaluate(&f, 2.0, None).unwrap();
        let row = r.row();
        assert_eq!(row[0], Some(2.0));
        assert_eq!(row[6], None);
        assert_eq!(row[10], Some(r.lambda_p));
        assert!(r.h_hat_p >= -1e-8 && r.f_p >= -1e-8);
    }
}
