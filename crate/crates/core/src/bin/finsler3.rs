use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use finsler3::campaign::{
    cmd_delta, cmd_length, cmd_reduce, cmd_solve, cmd_verify, Backend, CampaignConfig, Format,
    Identity, ReportDocument,
};

/// Cubic lengths, identity checks and the generalized Duffin-Kemmer equation
/// for Finslerian 3-spinors.
#[derive(Debug, Parser)]
#[command(name = "finsler3", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, default_value_t = 100)]
    trials: usize,

    #[arg(long, global = true, value_enum, default_value = "exact")]
    backend: Backend,

    /// Report destination; for `delta`, the dump file (default deltas.json).
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// |X|³ and |X| of a 9-vector, with a determinant cross-check.
    Length {
        #[arg(long = "x", num_args = 9, allow_negative_numbers = true, required = true)]
        x: Vec<String>,
    },
    /// Run a seeded identity campaign.
    Verify {
        #[arg(value_enum)]
        identity: Identity,
    },
    /// Write the nine δ-matrices as JSON and check them.
    Delta,
    /// Kernel of P^A δ_A − M for a 9-momentum.
    Solve {
        #[arg(long = "p", alias = "momentum", num_args = 9, allow_negative_numbers = true, required = true)]
        p: Vec<String>,
        #[arg(long, allow_negative_numbers = true)]
        mass: String,
    },
    /// Reduce to the 4-dimensional Dirac and Klein-Gordon equations.
    Reduce {
        #[arg(long = "p", alias = "momentum", num_args = 4, allow_negative_numbers = true, required = true)]
        p: Vec<String>,
        #[arg(long, allow_negative_numbers = true)]
        mass: String,
    },
}

fn run(cli: &Cli) -> finsler3::Result<ReportDocument> {
    let cfg = CampaignConfig::new(cli.trials, cli.seed, cli.backend)?;
    match &cli.command {
        Command::Length { x } => cmd_length(x, cli.backend),
        Command::Verify { identity } => Ok(cmd_verify(*identity, &cfg)),
        Command::Delta => {
            let path = cli.output.clone().unwrap_or_else(|| PathBuf::from("deltas.json"));
            cmd_delta(&path, &cfg)
        }
        Command::Solve { p, mass } => cmd_solve(p, mass, cli.backend),
        Command::Reduce { p, mass } => cmd_reduce(p, mass, cli.backend),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut doc = match run(&cli) {
        Ok(doc) => doc,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };
    if cli.timing {
        doc.timing_ms = Some(start.elapsed().as_millis());
    }
    let rendered = doc.render(cli.format);
    let report_path = cli.output.as_ref().filter(|_| !matches!(cli.command, Command::Delta));
    match report_path {
        Some(path) => {
            if let Err(err) = std::fs::write(path, rendered) {
                eprintln!("error: cannot write {}: {err}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::from(doc.exit_code() as u8)
}
