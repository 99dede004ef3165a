//! Uniform grids with trapezoid quadrature.
//!
//! A [`Grid`] turns every `∫ f dx` over `R^n` into a weighted sum. Two
//! geometries are supported: the full line `[-L, L]` and the radial
//! half-line `[0, R]` for radially symmetric functions on `R^n`, where the
//! trapezoid weights carry the surface factor `ω_n r^{n-1}`.

use alloc::vec::Vec;

use crate::math::{ln_gamma, Real};
use crate::{Error, Result};

/// Minimum number of grid points accepted by [`Grid::new`].
pub const MIN_POINTS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridKind {
    /// Symmetric interval `[-L, L]`, dimension 1.
    Line1D,
    /// Radial coordinate `r ∈ [0, R]` of a radially symmetric function on `R^n`.
    RadialNd,
}

impl GridKind {
    pub fn name(self) -> &'static str {
        match self {
            GridKind::Line1D => "line1d",
            GridKind::RadialNd => "radial",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    kind: GridKind,
    dim: usize,
    extent: f64,
    spacing: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

/// Surface area `ω_n = 2 π^{n/2} / Γ(n/2)` of the unit sphere in `R^n`.
pub fn unit_sphere_area(n: usize) -> f64 {
    let half = 0.5 * n as f64;
    2.0 * (half * core::f64::consts::PI.ln() - ln_gamma(half)).exp()
}

impl Grid {
    /// Builds a uniform grid with `points` nodes.
    ///
    /// `extent` is `L` for [`GridKind::Line1D`] (nodes on `[-L, L]`) and `R`
    /// for [`GridKind::RadialNd`] (nodes on `[0, R]`, first node at the
    /// origin).
    pub fn new(kind: GridKind, dim: usize, extent: f64, points: usize) -> Result<Self> {
        if points < MIN_POINTS {
            return Err(Error::TooCoarse { points, min: MIN_POINTS });
        }
        if !(extent.is_finite() && extent > 0.0) {
            return Err(Error::NonPositiveExtent(extent));
        }
        match kind {
            GridKind::Line1D if dim != 1 => return Err(Error::InvalidDimension { kind: "a line1d grid", n: dim }),
            GridKind::RadialNd if dim == 0 => return Err(Error::InvalidDimension { kind: "a radial grid", n: dim }),
            _ => {}
        }
        let (start, length) = match kind {
            GridKind::Line1D => (-extent, 2.0 * extent),
            GridKind::RadialNd => (0.0, extent),
        };
        let intervals = (points - 1) as f64;
        let spacing = length / intervals;
        let mut nodes: Vec<f64> = (0..points).map(|i| start + length * (i as f64 / intervals)).collect();
        nodes[points - 1] = start + length;
        if kind == GridKind::Line1D {
            // exact mirror symmetry
            for i in 0..points / 2 {
                nodes[points - 1 - i] = -nodes[i];
            }
            if points % 2 == 1 {
                nodes[points / 2] = 0.0;
            }
        }
        let surface = unit_sphere_area(dim);
        let weights = nodes
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let trap = if i == 0 || i == points - 1 { 0.5 * spacing } else { spacing };
                match kind {
                    GridKind::Line1D => trap,
                    GridKind::RadialNd => trap * surface * x.powi(dim as i32 - 1),
                }
            })
            .collect();
        Ok(Grid { kind, dim, extent, spacing, nodes, weights })
    }

    pub fn line(extent: f64, points: usize) -> Result<Self> {
        Self::new(GridKind::Line1D, 1, extent, points)
    }

    pub fn radial(dim: usize, extent: f64, points: usize) -> Result<Self> {
        Self::new(GridKind::RadialNd, dim, extent, points)
    }

    pub fn kind(&self) -> GridKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn extent(&self) -> f64 {
        self.extent
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `|x|` at node `i`.
    #[inline]
    pub fn radius(&self, i: usize) -> f64 {
        self.nodes[i].abs()
    }

    /// Area factor of a surface `|x| = r`: 1 on the line, `ω_n r^{n-1}` radially.
    pub fn surface_factor(&self, r: f64) -> f64 {
        match self.kind {
            GridKind::Line1D => 1.0,
            GridKind::RadialNd => unit_sphere_area(self.dim) * r.abs().powi(self.dim as i32 - 1),
        }
    }

    /// `Σ_i weights_i · values_i`.
    pub fn integrate(&self, values: &[f64]) -> Result<f64> {
        self.check_len(values)?;
        Ok(self.sum(values))
    }

    pub(crate) fn sum(&self, values: &[f64]) -> f64 {
        self.weights.iter().zip(values).map(|(w, v)| w * v).sum()
    }

    /// Quadrature of `f(x_i)` over the grid.
    pub fn integrate_fn(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.weights.iter().zip(&self.nodes).map(|(w, &x)| w * f(x)).sum()
    }

    /// First derivative along the grid coordinate: central differences inside,
    /// second-order one-sided differences at both ends.
    pub fn gradient(&self, values: &[f64]) -> Result<Vec<f64>> {
        self.check_len(values)?;
        let n = values.len();
        if n < 3 {
            return Err(Error::TooFewNodes(n));
        }
        let h = self.spacing;
        let mut out = Vec::with_capacity(n);
        out.push((-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * h));
        for i in 1..n - 1 {
            out.push((values[i + 1] - values[i - 1]) / (2.0 * h));
        }
        out.push((3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) / (2.0 * h));
        Ok(out)
    }

    fn check_len(&self, values: &[f64]) -> Result<()> {
        if values.len() != self.nodes.len() {
            return Err(Error::LengthMismatch { expected: self.nodes.len(), found: values.len() });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use core::f64::consts::PI;

    #[test]
    fn line_grid_spacing_and_weights() {
        let g = Grid::line(1.0, 201).unwrap();
        assert!((g.spacing() - 0.01).abs() < 1e-15);
        let total: f64 = g.weights().iter().sum();
        assert!((total - 2.0).abs() < 1e-12);
        assert_eq!(g.nodes()[0], -1.0);
        assert_eq!(g.nodes()[200], 1.0);
    }

    #[test]
    fn radial_ball_volume() {
        let g = Grid::radial(3, 1.0, 401).unwrap();
        let vol = g.integrate(&vec![1.0; 401]).unwrap();
        let exact = 4.0 * PI / 3.0;
        assert!(((vol - exact) / exact).abs() < 1e-4);
        assert_eq!(g.nodes()[0], 0.0);
    }

    #[test]
    fn radial_one_dimensional_measures_symmetric_interval() {
        let g = Grid::radial(1, 1.0, 101).unwrap();
        let v = g.integrate(&vec![1.0; 101]).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn sphere_areas() {
        assert!((unit_sphere_area(1) - 2.0).abs() < 1e-14);
        assert!((unit_sphere_area(2) - 2.0 * PI).abs() < 1e-13);
        assert!((unit_sphere_area(3) - 4.0 * PI).abs() < 1e-13);
    }

    #[test]
    fn rejects_bad_grids() {
        assert_eq!(Grid::line(10.0, 8), Err(Error::TooCoarse { points: 8, min: 16 }));
        assert!(matches!(Grid::line(0.0, 100), Err(Error::NonPositiveExtent(_))));
        assert!(matches!(Grid::line(-1.0, 100), Err(Error::NonPositiveExtent(_))));
        assert!(matches!(Grid::new(GridKind::Line1D, 2, 1.0, 100), Err(Error::InvalidDimension { .. })));
        assert!(matches!(Grid::radial(0, 1.0, 100), Err(Error::InvalidDimension { .. })));
    }

    #[test]
    fn integrate_checks_length() {
        let g = Grid::line(1.0, 32).unwrap();
        assert!(matches!(g.integrate(&[1.0; 3]), Err(Error::LengthMismatch { .. })));
        assert_eq!(g.integrate(&[0.0; 32]).unwrap(), 0.0);
    }

    #[test]
    fn gaussian_has_unit_mass() {
        let g = Grid::line(10.0, 2001).unwrap();
        let m = g.integrate_fn(|x| (-0.5 * x * x).exp() / (2.0 * PI).sqrt());
        assert!((m - 1.0).abs() < 1e-8);
    }

    #[test]
    fn gradient_is_exact_on_affine_and_quadratic() {
        let g = Grid::line(1.0, 201).unwrap();
        let affine: Vec<f64> = g.nodes().iter().map(|x| 3.0 * x + 1.0).collect();
        for d in g.gradient(&affine).unwrap() {
            assert!((d - 3.0).abs() < 1e-12);
        }
        let quad: Vec<f64> = g.nodes().iter().map(|x| x * x).collect();
        let d = g.gradient(&quad).unwrap();
        for (di, x) in d.iter().zip(g.nodes()).take(200).skip(1) {
            assert!((di - 2.0 * x).abs() < 1e-10);
        }
        let flat = g.gradient(&[2.5; 201]).unwrap();
        assert!(flat.iter().all(|&d| d == 0.0));
    }

    #[test]
    fn trapezoid_is_second_order() {
        // smooth non-periodic integrand: ∫_{-1}^{1} e^x dx
        let exact = 1f64.exp() - (-1f64).exp();
        let err = |pts| {
            let g = Grid::line(1.0, pts).unwrap();
            (g.integrate_fn(|x| x.exp()) - exact).abs()
        };
        let ratio = err(101) / err(201);
        assert!((3.5..=4.5).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn gradient_of_compact_bump_integrates_to_zero() {
        let g = Grid::line(2.0, 401).unwrap();
        let bump: Vec<f64> =
            g.nodes().iter().map(|&x| if x.abs() < 1.0 { (1.0 - x * x).powi(3) } else { 0.0 }).collect();
        let d = g.gradient(&bump).unwrap();
        assert!(g.integrate(&d).unwrap().abs() < 1e-10);
    }
}
