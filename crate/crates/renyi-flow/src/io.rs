//! File formats: density and profile records, trajectory directories and the
//! CSV reports.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use renyi_flow_core::bounds::{DecayCurve, InequalityReport, ItemKind, RateTable};
use renyi_flow_core::{Density, EntropyReport, Grid, GridKind, ScaledTrajectory, SteadyProfile, Trajectory};

use crate::error::{HarnessError, Result};

/// Serialized density: `kind` is `line1d` or `radial`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DensityRecord {
    pub kind: String,
    pub n: usize,
    pub extent: f64,
    pub points: usize,
    pub values: Vec<f64>,
}

impl DensityRecord {
    pub fn from_density(f: &Density) -> Self {
        let g = f.grid();
        DensityRecord {
            kind: g.kind().name().to_string(),
            n: g.dim(),
            extent: g.extent(),
            points: g.len(),
            values: f.values().to_vec(),
        }
    }

    pub fn grid_kind(&self) -> Result<GridKind> {
        match self.kind.as_str() {
            "line1d" => Ok(GridKind::Line1D),
            "radial" => Ok(GridKind::RadialNd),
            other => Err(HarnessError::Config(format!("unknown grid kind {other:?}"))),
        }
    }

    pub fn to_density(&self) -> Result<Density> {
        let grid = Grid::new(self.grid_kind()?, self.n, self.extent, self.points)?;
        Ok(Density::new(Arc::new(grid), self.values.clone())?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfileRecord {
    pub p: f64,
    pub n: usize,
    #[serde(rename = "C_B")]
    pub c_b: f64,
    pub sigma: f64,
    pub lambda: f64,
    #[serde(rename = "E0")]
    pub e0: f64,
}

impl From<&SteadyProfile> for ProfileRecord {
    fn from(b: &SteadyProfile) -> Self {
        ProfileRecord { p: b.p, n: b.n, c_b: b.c_b, sigma: b.sigma, lambda: b.lambda, e0: b.e0 }
    }
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(HarnessError::json(path))?;
    text.push('\n');
    fs::write(path, text).map_err(HarnessError::io(path))
}

pub fn read_density_json(path: &Path) -> Result<Density> {
    let text = fs::read_to_string(path).map_err(HarnessError::io(path))?;
    let record: DensityRecord = serde_json::from_str(&text).map_err(HarnessError::json(path))?;
    record.to_density()
}

fn csv_writer(path: &Path) -> Result<csv::Writer<fs::File>> {
    csv::Writer::from_path(path).map_err(HarnessError::csv(path))
}

/// Writes a CSV file from a header and rows of preformatted fields.
pub fn write_csv<I, R>(path: &Path, header: &[&str], rows: I) -> Result<()>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv_writer(path)?;
    w.write_record(header).map_err(HarnessError::csv(path))?;
    for row in rows {
        let row: Vec<String> = row.into_iter().collect();
        w.write_record(&row).map_err(HarnessError::csv(path))?;
    }
    w.flush().map_err(HarnessError::io(path))
}

/// Shortest round-trip representation; empty for a missing value.
pub fn num(x: f64) -> String {
    format!("{x:?}")
}

pub fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

pub const DENSITY_HEADER: [&str; 2] = ["coordinate", "value"];

pub fn write_density_csv(path: &Path, f: &Density) -> Result<()> {
    let rows = f.grid().nodes().iter().zip(f.values()).map(|(&x, &v)| [num(x), num(v)]);
    write_csv(path, &DENSITY_HEADER, rows)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverRecord {
    pub p: f64,
    pub n: usize,
    pub scheme: String,
    pub cfl: f64,
    pub t_end: f64,
    pub snapshot_times: Vec<f64>,
    pub value_floor: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryManifest {
    pub config: SolverRecord,
    pub provenance: String,
    pub times: Vec<f64>,
    pub masses: Vec<f64>,
    pub energies: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<Vec<f64>>,
}

fn solver_record(traj_config: &renyi_flow_core::SolverConfig) -> SolverRecord {
    SolverRecord {
        p: traj_config.p,
        n: traj_config.n,
        scheme: "explicit-fv".to_string(),
        cfl: traj_config.cfl,
        t_end: traj_config.t_end,
        snapshot_times: traj_config.snapshot_times.clone(),
        value_floor: traj_config.value_floor,
    }
}

pub fn snapshot_file(k: usize) -> String {
    format!("snapshot_{k:03}.csv")
}

fn write_snapshots<'a>(dir: &Path, densities: impl Iterator<Item = &'a Density>) -> Result<()> {
    for (k, d) in densities.enumerate() {
        write_density_csv(&dir.join(snapshot_file(k)), d)?;
    }
    Ok(())
}

/// One density CSV per snapshot plus `manifest.json`.
pub fn write_trajectory(dir: &Path, traj: &Trajectory) -> Result<()> {
    fs::create_dir_all(dir).map_err(HarnessError::io(dir))?;
    write_snapshots(dir, traj.snapshots.iter().map(|s| &s.density))?;
    let manifest = TrajectoryManifest {
        config: solver_record(&traj.config),
        provenance: traj.provenance.name().to_string(),
        times: traj.times(),
        masses: traj.masses(),
        energies: traj.energies(),
        tau: None,
    };
    write_json(&dir.join("manifest.json"), &manifest)
}

/// Same layout as [`write_trajectory`], with `tau` in the manifest.
pub fn write_scaled(dir: &Path, scaled: &ScaledTrajectory) -> Result<()> {
    fs::create_dir_all(dir).map_err(HarnessError::io(dir))?;
    write_snapshots(dir, scaled.entries.iter().map(|e| &e.u))?;
    let manifest = TrajectoryManifest {
        config: solver_record(&scaled.config),
        provenance: scaled.provenance.name().to_string(),
        times: scaled.entries.iter().map(|e| e.t).collect(),
        masses: scaled.entries.iter().map(|e| e.u.mass()).collect(),
        energies: scaled.entries.iter().map(|e| e.u.energy()).collect(),
        tau: Some(scaled.taus()),
    };
    write_json(&dir.join("manifest.json"), &manifest)
}

pub const DECAY_HEADER: [&str; 6] = ["t", "tau", "energy", "H_measured", "H_bound", "slack"];

pub fn write_decay_curve(path: &Path, curve: &DecayCurve) -> Result<()> {
    let rows = curve
        .entries
        .iter()
        .map(|e| [num(e.t), num(e.tau), num(e.energy), num(e.h_measured), num(e.h_bound), num(e.slack)]);
    write_csv(path, &DECAY_HEADER, rows)
}

pub const INEQUALITY_HEADER: [&str; 9] = ["sample", "p", "item", "kind", "lhs", "rhs", "slack", "tolerance", "holds"];

pub fn inequality_rows(label: &str, report: &InequalityReport) -> Vec<[String; 9]> {
    report
        .items
        .iter()
        .map(|i| {
            [
                label.to_string(),
                num(report.p),
                i.name.to_string(),
                match i.kind {
                    ItemKind::Inequality => "inequality",
                    ItemKind::Equality => "equality",
                }
                .to_string(),
                num(i.lhs),
                num(i.rhs),
                num(i.slack),
                num(i.tolerance),
                i.holds().to_string(),
            ]
        })
        .collect()
}

pub fn entropy_header() -> Vec<&'static str> {
    let mut h = vec!["t"];
    h.extend(EntropyReport::COLUMNS);
    h
}

pub fn entropy_row(t: f64, report: &EntropyReport) -> Vec<String> {
    let mut row = vec![num(t)];
    row.extend(report.row().iter().map(|&v| opt(v)));
    row
}

pub const RATE_HEADER: [&str; 7] = ["sample", "H0", "E0", "n", "tau", "r1", "r2"];

pub fn rate_rows(sample: usize, table: &RateTable) -> Vec<[String; 7]> {
    table
        .rows
        .iter()
        .map(|r| {
            [sample.to_string(), num(table.h0), num(table.e0), table.n.to_string(), num(r.tau), num(r.r1), num(r.r2)]
        })
        .collect()
}
