//! One-parameter sweeps: each value runs isolated on its own thread and
//! writes its own directory; the coordinator merges the summaries into
//! `sweep.csv`.

use std::fs;
use std::str::FromStr;
use std::thread;

use crate::config::ExperimentConfig;
use crate::error::{HarnessError, Result, EXIT_CHECK_FAILED};
use crate::io::{self, num, opt};
use crate::run::{run, RunSummary};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParam {
    P,
    Points,
    TEnd,
    E0,
}

impl SweepParam {
    pub fn name(self) -> &'static str {
        match self {
            SweepParam::P => "p",
            SweepParam::Points => "points",
            SweepParam::TEnd => "t_end",
            SweepParam::E0 => "E0",
        }
    }

    fn apply(self, config: &mut ExperimentConfig, value: f64) -> Result<()> {
        match self {
            SweepParam::P => config.p = value,
            SweepParam::TEnd => config.t_end = value,
            SweepParam::E0 => config.e0 = value,
            SweepParam::Points => {
                if !(value >= 0.0 && value.fract() == 0.0) {
                    return Err(HarnessError::Config(format!("points must be an integer, got {value}")));
                }
                config.grid.points = value as usize;
            }
        }
        Ok(())
    }
}

impl FromStr for SweepParam {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p" => Ok(SweepParam::P),
            "points" => Ok(SweepParam::Points),
            "t_end" => Ok(SweepParam::TEnd),
            "E0" | "e0" => Ok(SweepParam::E0),
            _ => Err(HarnessError::UnknownParam(s.to_string())),
        }
    }
}

#[derive(Debug)]
pub struct SweepRow {
    pub value: f64,
    pub outcome: Result<RunSummary>,
}

#[derive(Debug)]
pub struct SweepReport {
    pub param: SweepParam,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    /// `L¹` error ratio between consecutive rows of a `points` sweep.
    pub fn ratios(&self) -> Vec<Option<f64>> {
        let errors: Vec<Option<f64>> =
            self.rows.iter().map(|r| r.outcome.as_ref().ok().and_then(|s| s.l1_error)).collect();
        (0..errors.len())
            .map(|i| match (self.param, i.checked_sub(1).and_then(|j| errors[j]), errors[i]) {
                (SweepParam::Points, Some(prev), Some(cur)) if cur > 0.0 => Some(prev / cur),
                _ => None,
            })
            .collect()
    }

    /// 0 when every run passed, the first run's error code when all runs
    /// errored, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        if self.rows.iter().all(|r| matches!(&r.outcome, Ok(s) if s.passed)) {
            return 0;
        }
        match self.rows.first() {
            Some(SweepRow { outcome: Err(e), .. }) if self.rows.iter().all(|r| r.outcome.is_err()) => e.exit_code(),
            _ => EXIT_CHECK_FAILED,
        }
    }
}

/// Parses a comma-separated list; blank entries are skipped.
pub fn parse_values(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(str::trim)
        .filter(|v| !v.is_empty())
        .map(|v| v.parse().map_err(|_| HarnessError::BadValue(v.to_string())))
        .collect()
}

pub const SWEEP_HEADER: [&str; 8] =
    ["param", "value", "status", "min_slack", "max_gap", "l1_error", "ratio", "message"];

/// Runs `base` once per value of `param` into `<output_dir>/run_<k>` and
/// writes `<output_dir>/sweep.csv`.
pub fn sweep(base: &ExperimentConfig, param: SweepParam, values: &[f64]) -> Result<SweepReport> {
    if values.is_empty() {
        return Err(HarnessError::EmptySweep);
    }
    let out = base.output_dir.clone();
    fs::create_dir_all(&out).map_err(HarnessError::io(&out))?;
    let configs: Vec<Result<ExperimentConfig>> = values
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            let mut c = base.clone();
            c.output_dir = out.join(format!("run_{k:02}"));
            param.apply(&mut c, v)?;
            Ok(c)
        })
        .collect();
    let outcomes: Vec<Result<RunSummary>> = thread::scope(|scope| {
        let handles: Vec<_> = configs.into_iter().map(|c| scope.spawn(move || c.and_then(|c| run(&c)))).collect();
        handles.into_iter().map(|h| h.join().expect("sweep worker panicked")).collect()
    });
    let report = SweepReport {
        param,
        rows: values.iter().zip(outcomes).map(|(&value, outcome)| SweepRow { value, outcome }).collect(),
    };
    let ratios = report.ratios();
    let rows = report.rows.iter().zip(&ratios).map(|(r, &ratio)| {
        let (status, min_slack, max_gap, l1, message) = match &r.outcome {
            Ok(s) => {
                let failed: Vec<&str> = s.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
                let status = if s.passed { "pass" } else { "fail" };
                (status, s.min_slack, s.max_gap, s.l1_error, failed.join(" "))
            }
            Err(e) => ("error", None, None, None, e.to_string()),
        };
        [
            param.name().to_string(),
            num(r.value),
            status.to_string(),
            opt(min_slack),
            opt(max_gap),
            opt(l1),
            opt(ratio),
            message,
        ]
    });
    io::write_csv(&out.join("sweep.csv"), &SWEEP_HEADER, rows)?;
    Ok(report)
}
