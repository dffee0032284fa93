use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use relgrad::SolverKind;
use relgrad_cli::{
    presets, run_experiment, write_outputs, BoundsReport, ExperimentConfig, ExperimentOutcome,
    HarnessError, Overrides,
};

/// Gradient descent with relatively inexact gradients: experiments and bounds.
#[derive(Parser)]
#[command(name = "relgrad", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Args)]
struct Flags {
    /// Run seeds 0..N instead of the configured seeds.
    #[arg(long, global = true)]
    seed_count: Option<usize>,
    /// Directory for CSV output.
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
    /// Override the iteration budget.
    #[arg(long, global = true)]
    iterations: Option<usize>,
    /// Override the solver: constant_step, adaptive_l or adaptive_l_alpha.
    #[arg(long, global = true)]
    solver: Option<SolverKind>,
}

#[derive(Subcommand)]
enum Command {
    /// Single run: first swept level, first seed.
    Run { config: PathBuf },
    /// Every (level, seed) cell of the config.
    Sweep { config: PathBuf },
    /// Theoretical bounds for each swept level.
    Bounds { config: PathBuf },
    /// Reproduce a result table from a built-in preset.
    Table { preset: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            let code = err
                .downcast_ref::<HarnessError>()
                .map_or(1, HarnessError::exit_code);
            ExitCode::from(code)
        }
    }
}

fn execute(cli: Cli) -> anyhow::Result<ExitCode> {
    let overrides = Overrides {
        seed_count: cli.flags.seed_count,
        out_dir: cli.flags.out_dir,
        iterations: cli.flags.iterations,
        solver: cli.flags.solver,
    };
    match cli.command {
        Command::Run { config } => {
            let mut config = load(&config, &overrides)?;
            config.alphas.truncate(1);
            config.seeds = Some(config.seeds().into_iter().take(1).collect());
            config.reference = config.reference.map(|r| r[..1].to_vec());
            sweep(&config, false)
        }
        Command::Sweep { config } => sweep(&load(&config, &overrides)?, false),
        Command::Table { preset } => {
            let mut config = presets::preset(&preset)?;
            config.apply(&overrides)?;
            sweep(&config, true)
        }
        Command::Bounds { config } => {
            let config = load(&config, &overrides)?;
            for report in BoundsReport::for_config(&config)? {
                println!("{report}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load(path: &Path, overrides: &Overrides) -> anyhow::Result<ExperimentConfig> {
    let mut config = ExperimentConfig::load(path)?;
    config.apply(overrides)?;
    Ok(config)
}

fn sweep(config: &ExperimentConfig, compare: bool) -> anyhow::Result<ExitCode> {
    let outcome = run_experiment(config)?;
    let dir = config.out_dir();
    write_outputs(&dir, &outcome).with_context(|| format!("output directory {}", dir.display()))?;
    print_summary(&outcome, compare);
    println!("wrote {}", dir.display());
    if outcome.any_failed() {
        for cell in outcome.cells.iter().filter(|c| c.failed()) {
            eprintln!("alpha={} seed={}: {}", cell.alpha, cell.seed, cell.status());
        }
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

fn print_summary(outcome: &ExperimentOutcome, compare: bool) {
    if compare {
        println!(
            "{:>8}  {:>12}  {:>12}  {:>8}",
            "alpha", "median f", "reference", "ratio"
        );
    } else {
        println!("{:>8}  {:>12}", "alpha", "median f");
    }
    for row in &outcome.summary {
        match (compare, row.reference) {
            (true, Some(r)) => println!(
                "{:>8}  {:>12.4e}  {:>12.4e}  {:>8.3}",
                row.alpha,
                row.median_final,
                r,
                row.median_final / r
            ),
            _ => println!("{:>8}  {:>12.4e}", row.alpha, row.median_final),
        }
    }
}
