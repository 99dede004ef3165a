//! Initial data and seeded random Gaussian mixtures.

use std::sync::Arc;

use rand::Rng;

use renyi_flow_core::profiles::matched;
use renyi_flow_core::{Density, GaussianComponent, GaussianMixture, Grid};

use crate::config::{ExperimentConfig, InitialDatum};
use crate::error::{HarnessError, Result};
use crate::io::read_density_json;

/// Two equal Gaussians at `±1` with variance `0.2`, before normalization.
pub fn two_bump() -> GaussianMixture {
    GaussianMixture::new(
        1,
        vec![
            GaussianComponent { weight: 0.5, mean: -1.0, variance: 0.2 },
            GaussianComponent { weight: 0.5, mean: 1.0, variance: 0.2 },
        ],
    )
    .expect("valid mixture")
}

/// Builds the initial datum on `grid`, normalized to mass 1, mean 0 and
/// energy `E0`.
pub fn initial_density(config: &ExperimentConfig, grid: &Arc<Grid>) -> Result<Density> {
    let (n, e0) = (config.n, config.e0);
    let raw = match &config.initial_datum {
        InitialDatum::Gaussian => GaussianMixture::gaussian(n, e0 / n as f64)?.sample(grid)?,
        InitialDatum::TwoBump => two_bump().normalized(e0)?.sample(grid)?,
        InitialDatum::Barenblatt { perturbation } => {
            let (_, b) = matched(config.p, n, e0, grid)?;
            perturbed(&b, *perturbation, e0)?
        }
        InitialDatum::UniformBox => {
            // energy of the uniform ball of radius w is n w² / (n + 2)
            let nf = n as f64;
            let w = ((nf + 2.0) * e0 / nf).sqrt();
            let delta = 2.0 * grid.spacing();
            Density::from_fn(grid.clone(), |x| 0.5 * (1.0 - ((x.abs() - w) / delta).tanh()))?
        }
        InitialDatum::Custom { path } => {
            let f = read_density_json(path)?;
            if **f.grid() != **grid {
                return Err(HarnessError::Config(format!(
                    "{}: density grid differs from the configured grid",
                    path.display()
                )));
            }
            f
        }
    };
    Ok(raw.normalize(e0)?)
}

/// `(1 - ε) b + ε g` with `g` a unit-mass symmetric bump centered on the
/// sphere `|x| = (E0/n)^{1/2}`; the analytic tail of `b` is kept.
fn perturbed(b: &Density, eps: f64, e0: f64) -> Result<Density> {
    if eps == 0.0 {
        return Ok(b.clone());
    }
    let grid = b.grid().clone();
    let r0 = (e0 / grid.dim() as f64).sqrt();
    let s = 0.25 * r0;
    let bump = Density::from_fn(grid.clone(), |x| (-0.5 * ((x.abs() - r0) / s).powi(2)).exp())?;
    let scale = eps / bump.mass();
    let values = b.values().iter().zip(bump.values()).map(|(&v, &g)| (1.0 - eps) * v + scale * g).collect();
    Ok(match b.tail() {
        Some(t) => Density::with_tail(grid, values, t.scaled(1.0 - eps))?,
        None => Density::new(grid, values)?,
    })
}

/// Draws 2 to 4 components with weights in `[0.1, 1]`, means in
/// `[-1.5, 1.5]` (zero for `n > 1`) and variances in `[0.1, 1]`, then
/// normalizes to energy `e0`.
pub fn random_mixture(rng: &mut impl Rng, n: usize, e0: f64) -> Result<GaussianMixture> {
    let k = rng.gen_range(2..=4);
    let components = (0..k)
        .map(|_| GaussianComponent {
            weight: rng.gen_range(0.1..=1.0),
            mean: if n == 1 { rng.gen_range(-1.5..=1.5) } else { 0.0 },
            variance: rng.gen_range(0.1..=1.0),
        })
        .collect();
    Ok(GaussianMixture::new(n, components)?.normalized(e0)?)
}
