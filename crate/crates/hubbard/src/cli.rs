use std::path::PathBuf;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};

use crate::artifacts::{OutputDir, RunManifest};
use crate::commands;
use crate::config::RunConfig;

#[derive(Debug, Parser)]
#[command(
    name = "hubbard",
    version,
    about = "Resource estimation for fault-tolerant Fermi-Hubbard simulation"
)]
pub struct Cli {
    /// Master seed; overrides any seed in the config file.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Directory receiving reports, data files and manifest.json.
    #[arg(long, global = true, default_value = "out")]
    pub out_dir: PathBuf,
    /// Run configuration (JSON with a schema_version key).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Jordan-Wigner encode a problem instance and report its size and norm.
    Encode(EncodeArgs),
    /// Exact ground state and dynamic correlation of a desk-scale instance.
    Oracle(OracleArgs),
    /// Peak-recovery scenarios and the (T_max, epsilon) resolution sweep.
    Signal(SignalArgs),
    /// Logical cost chain, physical estimate and lattice sweep.
    Costs(CostsArgs),
    /// Monte Carlo utility distributions.
    Utility(UtilityArgs),
}

#[derive(Debug, Args)]
pub struct EncodeArgs {
    /// Problem specification JSON.
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// Observable as JSON, e.g. '{"kind":"density","site":0}'.
    #[arg(
        long,
        default_value = r#"{"kind":"lesser_green","kx":0,"ky":0,"spin":"up"}"#
    )]
    pub observable: String,
    #[arg(long, default_value_t = 0.2)]
    pub dt: f64,
    #[arg(long, default_value_t = 200.0)]
    pub t_max: f64,
    /// Restrict the ground-state search to this particle number.
    #[arg(long)]
    pub sector: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SignalArgs {
    /// Skip the resolution sweep and only run the two-record scenarios.
    #[arg(long)]
    pub no_sweep: bool,
    /// Noise realizations per scenario.
    #[arg(long, default_value_t = 100)]
    pub realizations: usize,
}

#[derive(Debug, Args)]
pub struct CostsArgs {
    #[arg(long)]
    pub spec: Option<PathBuf>,
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long)]
    pub delta: Option<f64>,
    /// Evolution time of the dynamic correlator.
    #[arg(long = "time")]
    pub time: Option<f64>,
    /// Use the shot count of the iterate bound instead of the reference count.
    #[arg(long, conflicts_with = "shots")]
    pub shots_formula: bool,
    /// Explicit shot count.
    #[arg(long)]
    pub shots: Option<u64>,
    /// Initial-state overlap lower bound (enables static costs with --gap).
    #[arg(long, requires = "gap")]
    pub gamma: Option<f64>,
    /// Spectral gap lower bound.
    #[arg(long, requires = "gamma")]
    pub gap: Option<f64>,
    /// Largest n of the n x n lattice sweep; 0 skips the sweep.
    #[arg(long, default_value_t = 7)]
    pub sweep_max: usize,
}

#[derive(Debug, Args)]
pub struct UtilityArgs {
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: usize,
    /// Histogram bins of the PDF and CDF files.
    #[arg(long, default_value_t = 200)]
    pub bins: usize,
}

pub struct Context {
    pub config: RunConfig,
    pub seed: Option<u64>,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Encode(_) => "encode",
            Command::Oracle(_) => "oracle",
            Command::Signal(_) => "signal",
            Command::Costs(_) => "costs",
            Command::Utility(_) => "utility",
        }
    }
}

/// Runs a parsed command line and writes the manifest after every artifact.
pub fn run(cli: Cli, args: Vec<String>) -> Result<RunManifest> {
    let config = RunConfig::load(cli.config.as_deref())?;
    let ctx = Context {
        config,
        seed: cli.seed,
    };
    let mut inputs: Vec<String> = cli.config.iter().map(|p| p.display().to_string()).collect();
    let mut out = OutputDir::create(&cli.out_dir)?;
    let seed = match &cli.command {
        Command::Encode(a) => {
            inputs.extend(a.spec.iter().map(|p| p.display().to_string()));
            commands::encode(&ctx, a, &mut out)?
        }
        Command::Oracle(a) => {
            inputs.extend(a.spec.iter().map(|p| p.display().to_string()));
            commands::oracle(&ctx, a, &mut out)?
        }
        Command::Signal(a) => commands::signal(&ctx, a, &mut out)?,
        Command::Costs(a) => {
            inputs.extend(a.spec.iter().map(|p| p.display().to_string()));
            commands::costs(&ctx, a, &mut out)?
        }
        Command::Utility(a) => commands::utility(&ctx, a, &mut out)?,
    };
    out.finish(cli.command.name(), args, inputs, seed)
}
