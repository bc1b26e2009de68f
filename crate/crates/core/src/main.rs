use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use sir_sde::scenario::{self, example_params, CliOverrides, ScenarioConfig};
use sir_sde::Error;

/// Stochastic SIR toolkit: classify parameter sets, simulate sample paths,
/// and emit the data files behind each asymptotic regime.
#[derive(Parser, Debug)]
#[command(version, about, long_about = None)]
struct Args {
    /// Flat key = value config file; without it the first canonical
    /// parameter set is used and --scenario selects the run.
    #[arg(long)]
    config: Option<PathBuf>,

    /// Scenario name (simulate, classify, stationary, lyapunov, tv-decay,
    /// support, example1, example2, example3).
    #[arg(long)]
    scenario: Option<String>,

    /// Master seed for all randomness.
    #[arg(long)]
    seed: Option<u64>,

    /// Number of ensemble paths.
    #[arg(long)]
    paths: Option<usize>,

    /// Integration step size.
    #[arg(long)]
    dt: Option<f64>,

    /// Simulation horizon.
    #[arg(long)]
    t_final: Option<f64>,

    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Suppress progress output.
    #[arg(long)]
    quiet: bool,
}

fn run(args: Args) -> Result<(), Error> {
    let base = match &args.config {
        Some(path) => scenario::parse_config(path)?,
        None => {
            let name = args.scenario.as_deref().ok_or_else(|| {
                Error::Config("either --config or --scenario is required".into())
            })?;
            ScenarioConfig::new(example_params(1), name)
        }
    };
    let overrides = CliOverrides {
        scenario: args.scenario,
        seed: args.seed,
        paths: args.paths,
        dt: args.dt,
        t_final: args.t_final,
        out: args.out,
        quiet: args.quiet,
    };
    scenario::run(&overrides.apply(base))
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) if e.use_stderr() => {
            eprintln!("{e}");
            return ExitCode::from(1);
        }
        Err(e) => {
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Error::Io(e)) => {
            eprintln!("io error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
