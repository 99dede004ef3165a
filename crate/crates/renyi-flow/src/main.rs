use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use renyi_flow::error::EXIT_CHECK_FAILED;
use renyi_flow::sweep::parse_values;
use renyi_flow::{preset, run, sweep, ExperimentConfig, HarnessError, RunSummary, SweepParam};

#[derive(Parser)]
#[command(name = "renyi-flow", version, about = "Rényi entropy decay experiments for v_t = Δv^p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the experiment described by a JSON config.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Overrides `output_dir` of the config.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        quiet: bool,
    },
    /// Repeat a config over values of one parameter (p, points, t_end, E0).
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        param: String,
        /// Comma-separated values.
        #[arg(long, allow_hyphen_values = true)]
        values: String,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        quiet: bool,
    },
    /// Run a named preset.
    Preset {
        name: String,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        quiet: bool,
    },
}

fn print_summary(s: &RunSummary) {
    for c in &s.checks {
        let verdict = if c.passed { "PASS" } else { "FAIL" };
        println!("{verdict} {} = {:e} ({} {:e})", c.name, c.value, c.relation.symbol(), c.limit);
    }
}

fn execute(config: ExperimentConfig, quiet: bool) -> Result<u8, HarnessError> {
    let summary = run(&config)?;
    if !quiet {
        print_summary(&summary);
        println!("artifacts in {}", config.output_dir.display());
    }
    Ok(if summary.passed { 0 } else { EXIT_CHECK_FAILED })
}

fn dispatch(cli: Cli) -> Result<u8, HarnessError> {
    match cli.command {
        Command::Run { config, output, quiet } => {
            let mut c = ExperimentConfig::load(&config)?;
            if let Some(o) = output {
                c.output_dir = o;
            }
            execute(c, quiet)
        }
        Command::Preset { name, output, quiet } => {
            let mut c = preset(&name).ok_or(HarnessError::UnknownPreset(name))?;
            if let Some(o) = output {
                c.output_dir = o;
            }
            execute(c, quiet)
        }
        Command::Sweep { config, param, values, output, quiet } => {
            let mut c = ExperimentConfig::load(&config)?;
            if let Some(o) = output {
                c.output_dir = o;
            }
            let param: SweepParam = param.parse()?;
            let report = sweep(&c, param, &parse_values(&values)?)?;
            if !quiet {
                for row in &report.rows {
                    match &row.outcome {
                        Ok(s) => {
                            let verdict = if s.passed { "PASS" } else { "FAIL" };
                            println!("{verdict} {} = {}", param.name(), row.value);
                        }
                        Err(e) => println!("ERROR {} = {}: {e}", param.name(), row.value),
                    }
                }
                println!("summary in {}", c.output_dir.join("sweep.csv").display());
            }
            Ok(report.exit_code())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
