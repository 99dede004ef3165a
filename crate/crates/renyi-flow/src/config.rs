//! Declarative experiment configuration, read from a single JSON file.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use renyi_flow_core::entropy::SHANNON_WINDOW;
use renyi_flow_core::{check_admissible, critical_exponent, Grid, GridKind};

use crate::error::{HarnessError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    /// `p = 1`.
    Heat,
    /// Porous medium, `p > 1`.
    Pme,
    /// Fast diffusion, `n/(n+2) < p < 1`.
    FastDiffusion,
    /// Functional inequalities over seeded random Gaussian mixtures.
    InequalitySweep,
    /// `r₁ ≤ r₂` over seeded random `(H₀, E₀, n)`.
    RateComparison,
}

impl Scenario {
    pub fn evolves(self) -> bool {
        matches!(self, Scenario::Heat | Scenario::Pme | Scenario::FastDiffusion)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridKindSpec {
    Line,
    Radial,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub kind: GridKindSpec,
    pub extent: f64,
    pub points: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { kind: GridKindSpec::Line, extent: 25.0, points: 1001 }
    }
}

impl GridSpec {
    pub fn build(&self, n: usize) -> Result<Arc<Grid>> {
        let kind = match self.kind {
            GridKindSpec::Line => GridKind::Line1D,
            GridKindSpec::Radial => GridKind::RadialNd,
        };
        Ok(Arc::new(Grid::new(kind, n, self.extent, self.points)?))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum InitialDatum {
    Gaussian,
    /// Matched steady profile mixed with a symmetric off-center bump of
    /// weight `perturbation`.
    Barenblatt {
        #[serde(default)]
        perturbation: f64,
    },
    /// Two equal Gaussians at `±1`, line grids only.
    TwoBump,
    /// Indicator of a centered ball, edges smoothed over two cells.
    UniformBox,
    /// Density JSON record on the configured grid.
    Custom {
        path: PathBuf,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub scenario: Scenario,
    #[serde(default = "one")]
    pub p: f64,
    #[serde(default = "one_usize")]
    pub n: usize,
    #[serde(rename = "E0", default = "one")]
    pub e0: f64,
    #[serde(default)]
    pub grid: GridSpec,
    #[serde(default = "two_bump")]
    pub initial_datum: InitialDatum,
    #[serde(default = "one")]
    pub t_end: f64,
    #[serde(default = "eleven")]
    pub snapshot_count: usize,
    #[serde(default)]
    pub seed: u64,
    /// Number of random draws for the sweep scenarios.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default = "out_dir")]
    pub output_dir: PathBuf,
}

fn one() -> f64 {
    1.0
}

fn one_usize() -> usize {
    1
}

fn eleven() -> usize {
    11
}

fn two_bump() -> InitialDatum {
    InitialDatum::TwoBump
}

fn out_dir() -> PathBuf {
    PathBuf::from("out")
}

pub const DEFAULT_INEQUALITY_SAMPLES: usize = 50;
pub const DEFAULT_RATE_SAMPLES: usize = 20;

impl ExperimentConfig {
    pub fn from_json(text: &str, path: &Path) -> Result<Self> {
        serde_json::from_str(text).map_err(HarnessError::json(path))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(HarnessError::io(path))?;
        Self::from_json(&text, path)
    }

    pub fn samples(&self) -> usize {
        self.samples.unwrap_or(match self.scenario {
            Scenario::RateComparison => DEFAULT_RATE_SAMPLES,
            _ => DEFAULT_INEQUALITY_SAMPLES,
        })
    }

    pub fn validate(&self) -> Result<()> {
        let config = |msg: String| Err(HarnessError::Config(msg));
        if self.n == 0 {
            return config("n must be at least 1".into());
        }
        if !(self.e0.is_finite() && self.e0 > 0.0) {
            return config(format!("E0 must be positive, got {}", self.e0));
        }
        if self.scenario == Scenario::RateComparison {
            return if self.samples() == 0 { config("samples must be positive".into()) } else { Ok(()) };
        }
        if self.grid.kind == GridKindSpec::Line && self.n != 1 {
            return config(format!("a line grid needs n = 1, got n = {}", self.n));
        }
        if !(self.grid.extent.is_finite() && self.grid.extent > 0.0) {
            return config(format!("grid extent must be positive, got {}", self.grid.extent));
        }
        check_admissible(self.p, self.n)?;
        let shannon = (self.p - 1.0).abs() <= SHANNON_WINDOW;
        let inadmissible = |what: &str| {
            Err(HarnessError::Inadmissible(format!(
                "{what}, got p = {} (n = {}, p̄ = {:.6})",
                self.p,
                self.n,
                critical_exponent(self.n)
            )))
        };
        // p is finite past check_admissible
        match self.scenario {
            Scenario::Heat if !shannon => return inadmissible("heat needs p = 1"),
            Scenario::Pme if self.p <= 1.0 || shannon => return inadmissible("pme needs p > 1"),
            Scenario::FastDiffusion if self.p >= 1.0 || shannon => {
                return inadmissible("fast-diffusion needs p̄ < p < 1")
            }
            _ => {}
        }
        if self.scenario.evolves() {
            if !(self.t_end.is_finite() && self.t_end > 0.0) {
                return config(format!("t_end must be positive, got {}", self.t_end));
            }
            if self.snapshot_count < 3 {
                return config(format!("snapshot_count must be at least 3, got {}", self.snapshot_count));
            }
            if let InitialDatum::Barenblatt { perturbation } = self.initial_datum {
                if !(0.0..1.0).contains(&perturbation) {
                    return config(format!("perturbation must lie in [0, 1), got {perturbation}"));
                }
            }
            if self.initial_datum == InitialDatum::TwoBump && self.grid.kind != GridKindSpec::Line {
                return config("the two-bump datum needs a line grid".into());
            }
        } else if self.samples() == 0 {
            return config("samples must be positive".into());
        }
        Ok(())
    }
}
