//! Finite mixtures of Gaussians, with closed-form moments and heat flow.
//!
//! On radial grids every component is centered at the origin and isotropic.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::density::Density;
use crate::grid::{Grid, GridKind};
use crate::math::Real;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianComponent {
    pub weight: f64,
    pub mean: f64,
    /// Per-coordinate variance.
    pub variance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GaussianMixture {
    dim: usize,
    components: Vec<GaussianComponent>,
}

impl GaussianMixture {
    pub fn new(dim: usize, components: Vec<GaussianComponent>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension { kind: "a mixture", n: dim });
        }
        if components.is_empty() {
            return Err(Error::InvalidConfig("mixture needs at least one component"));
        }
        for c in &components {
            if !(c.weight > 0.0 && c.weight.is_finite()) {
                return Err(Error::InvalidConfig("mixture weights must be positive"));
            }
            if !(c.variance > 0.0 && c.variance.is_finite()) {
                return Err(Error::InvalidConfig("mixture variances must be positive"));
            }
            if !c.mean.is_finite() || (dim > 1 && c.mean != 0.0) {
                return Err(Error::InvalidConfig("mixture means must be finite, and zero for n > 1"));
            }
        }
        Ok(GaussianMixture { dim, components })
    }

    /// Single centered Gaussian with per-coordinate variance `variance`.
    pub fn gaussian(dim: usize, variance: f64) -> Result<Self> {
        Self::new(dim, alloc::vec![GaussianComponent { weight: 1.0, mean: 0.0, variance }])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[GaussianComponent] {
        &self.components
    }

    pub fn mass(&self) -> f64 {
        self.components.iter().map(|c| c.weight).sum()
    }

    pub fn mean(&self) -> f64 {
        self.components.iter().map(|c| c.weight * c.mean).sum::<f64>() / self.mass()
    }

    /// `∫ |x|² f`.
    pub fn energy(&self) -> f64 {
        let n = self.dim as f64;
        self.components.iter().map(|c| c.weight * (c.mean * c.mean + n * c.variance)).sum()
    }

    /// Value at `x` (radius `|x|` when `dim > 1`).
    pub fn value(&self, x: f64) -> f64 {
        let n = self.dim as f64;
        self.components
            .iter()
            .map(|c| {
                let d = x - c.mean;
                c.weight
                    * (2.0 * core::f64::consts::PI * c.variance).powf(-0.5 * n)
                    * (-d * d / (2.0 * c.variance)).exp()
            })
            .sum()
    }

    /// Mass 1, mean 0, energy `e0`, by rescaling weights, shifting means and
    /// dilating, all on the parameters.
    pub fn normalized(&self, e0: f64) -> Result<Self> {
        if !(e0.is_finite() && e0 > 0.0) {
            return Err(Error::NonPositiveEnergy(e0));
        }
        let mass = self.mass();
        let mu = self.mean();
        let centered: Vec<GaussianComponent> = self
            .components
            .iter()
            .map(|c| GaussianComponent { weight: c.weight / mass, mean: c.mean - mu, ..*c })
            .collect();
        let centered = GaussianMixture { dim: self.dim, components: centered };
        let s = (e0 / centered.energy()).sqrt();
        let components = centered
            .components
            .iter()
            .map(|c| GaussianComponent { mean: c.mean * s, variance: c.variance * s * s, ..*c })
            .collect();
        Ok(GaussianMixture { dim: self.dim, components })
    }

    /// Exact solution of the heat equation at time `t`: each variance grows
    /// by `2t`.
    pub fn heat_evolved(&self, t: f64) -> Self {
        let components =
            self.components.iter().map(|c| GaussianComponent { variance: c.variance + 2.0 * t, ..*c }).collect();
        GaussianMixture { dim: self.dim, components }
    }

    pub fn sample(&self, grid: &Arc<Grid>) -> Result<Density> {
        if grid.dim() != self.dim {
            return Err(Error::GridMismatch);
        }
        if grid.kind() == GridKind::RadialNd && self.components.iter().any(|c| c.mean != 0.0) {
            return Err(Error::InvalidConfig("radial grids need centered components"));
        }
        Density::from_fn(grid.clone(), |x| self.value(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_bump() -> GaussianMixture {
        GaussianMixture::new(
            1,
            alloc::vec![
                GaussianComponent { weight: 1.0, mean: -1.5, variance: 0.2 },
                GaussianComponent { weight: 3.0, mean: 1.0, variance: 0.5 },
            ],
        )
        .unwrap()
    }

    #[test]
    fn normalized_moments_analytic_and_sampled() {
        let m = two_bump().normalized(1.0).unwrap();
        assert!((m.mass() - 1.0).abs() < 1e-15);
        assert!(m.mean().abs() < 1e-15);
        assert!((m.energy() - 1.0).abs() < 1e-14);
        let g = Arc::new(Grid::line(10.0, 2001).unwrap());
        let d = m.sample(&g).unwrap();
        assert!((d.mass() - 1.0).abs() < 1e-10);
        assert!((d.energy() - 1.0).abs() < 1e-10);
        assert!(d.mean().abs() < 1e-10);
    }

    #[test]
    fn heat_energy_law() {
        let m = GaussianMixture::gaussian(3, 0.5).unwrap();
        let e = m.heat_evolved(0.25);
        assert!((e.energy() - (m.energy() + 2.0 * 3.0 * 0.25)).abs() < 1e-14);
        assert_eq!(e.components()[0].variance, 1.0);
    }

    #[test]
    fn rejects_bad_components() {
        assert!(GaussianMixture::new(1, alloc::vec![]).is_err());
        let off = GaussianComponent { weight: 1.0, mean: 1.0, variance: 1.0 };
        assert!(GaussianMixture::new(3, alloc::vec![off]).is_err());
        let neg = GaussianComponent { weight: 1.0, mean: 0.0, variance: -1.0 };
        assert!(GaussianMixture::new(1, alloc::vec![neg]).is_err());
    }
}
