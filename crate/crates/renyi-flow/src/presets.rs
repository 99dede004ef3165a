//! Named scenarios.

use std::path::PathBuf;

use crate::config::{ExperimentConfig, GridKindSpec, GridSpec, InitialDatum, Scenario};

pub const NAMES: [&str; 7] = [
    "heat-twobump",
    "pme-barenblatt",
    "pme-perturbed",
    "pme-twobump",
    "fd-perturbed",
    "inequality-sweep",
    "rate-comparison",
];

fn line(extent: f64, points: usize) -> GridSpec {
    GridSpec { kind: GridKindSpec::Line, extent, points }
}

fn base(scenario: Scenario, p: f64, name: &str) -> ExperimentConfig {
    ExperimentConfig {
        scenario,
        p,
        n: 1,
        e0: 1.0,
        grid: GridSpec::default(),
        initial_datum: InitialDatum::TwoBump,
        t_end: 1.0,
        snapshot_count: 11,
        seed: 0,
        samples: None,
        output_dir: PathBuf::from("out").join(name),
    }
}

/// The preset called `name`, writing to `out/<name>`.
pub fn preset(name: &str) -> Option<ExperimentConfig> {
    let mut c = match name {
        "heat-twobump" => {
            let mut c = base(Scenario::Heat, 1.0, name);
            c.t_end = 5.0;
            c.snapshot_count = 20;
            c
        }
        "pme-barenblatt" => {
            let mut c = base(Scenario::Pme, 2.0, name);
            c.grid = line(8.0, 1601);
            c.initial_datum = InitialDatum::Barenblatt { perturbation: 0.0 };
            c
        }
        "pme-perturbed" => {
            let mut c = base(Scenario::Pme, 2.0, name);
            c.grid = line(8.0, 801);
            c.initial_datum = InitialDatum::Barenblatt { perturbation: 0.3 };
            c.t_end = 2.0;
            c.snapshot_count = 41;
            c
        }
        "pme-twobump" => {
            let mut c = base(Scenario::Pme, 2.0, name);
            c.grid = line(8.0, 801);
            c.t_end = 2.0;
            c.snapshot_count = 41;
            c
        }
        "fd-perturbed" => {
            let mut c = base(Scenario::FastDiffusion, 0.75, name);
            c.grid = line(40.0, 801);
            c.initial_datum = InitialDatum::Barenblatt { perturbation: 0.3 };
            c.snapshot_count = 21;
            c
        }
        "inequality-sweep" => {
            let mut c = base(Scenario::InequalitySweep, 1.0, name);
            c.grid = line(10.0, 2501);
            c.seed = 7;
            c
        }
        "rate-comparison" => {
            let mut c = base(Scenario::RateComparison, 1.0, name);
            c.seed = 11;
            c
        }
        _ => return None,
    };
    c.samples = match c.scenario {
        Scenario::InequalitySweep | Scenario::RateComparison => Some(c.samples()),
        _ => None,
    };
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_preset_validates() {
        for name in NAMES {
            let c = preset(name).unwrap();
            c.validate().unwrap();
            assert_eq!(c.output_dir, PathBuf::from("out").join(name));
        }
        assert!(preset("nope").is_none());
    }
}
