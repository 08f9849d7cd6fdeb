//! `ccnr`: realignment-criterion reports, sweeps and decompositions for
//! bipartite states stored as JSON.
//!
//! Exit status is 0 when a result was computed, 2 on unusable input and 3
//! when the input is not a valid state.

mod commands;
mod error;
mod format;
mod statefile;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;

use ccnr_core::states::Tolerances;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::sweep::{Range, SweepFamily};

#[derive(Parser, Debug)]
#[command(
    name = "ccnr",
    version,
    about = "Realignment (CCNR) separability toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every criterion on a state file and print the report
    Check(CheckArgs),
    /// Sweep a family parameter and write one CSV row per grid point
    Sweep(SweepArgs),
    /// Schmidt coefficients, cross norm and robustness of a pure state
    Schmidt(LoadArgs),
    /// Operator Schmidt coefficients of a state and their sum
    Oschmidt(LoadArgs),
    /// Write a state file for a family member or a random state
    Gen(GenArgs),
}

#[derive(Args, Debug)]
struct LoadArgs {
    /// State file (JSON)
    path: PathBuf,
    /// Override the stored dims, e.g. `--dims 2,3`
    #[arg(long, value_parser = parse_dims)]
    dims: Option<[usize; 2]>,
    /// Tolerance on the smallest eigenvalue
    #[arg(long, default_value_t = 1e-10)]
    tol_psd: f64,
    /// Relative tolerance on the Hermiticity residual
    #[arg(long, default_value_t = 1e-10)]
    tol_herm: f64,
    /// Emit one JSON object instead of text
    #[arg(long)]
    json: bool,
}

impl LoadArgs {
    fn tolerances(&self) -> Tolerances {
        Tolerances {
            herm: self.tol_herm,
            psd: self.tol_psd,
            ..Tolerances::default()
        }
    }
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    load: LoadArgs,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(value_enum)]
    family: SweepFamily,
    /// Local dimension for werner and isotropic (default 2)
    #[arg(long)]
    d: Option<usize>,
    /// Parameter grid `start:stop:step`
    #[arg(long, allow_hyphen_values = true)]
    range: Range,
    /// Output CSV path; standard output when absent
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenFamily {
    /// Werner state; parameter f
    Werner,
    /// Isotropic state; parameter F
    Isotropic,
    /// Bell-diagonal state; parameter `l0,l1,l2,l3`
    Bell,
    /// Two-qubit family; parameter p
    Qubit,
    /// Two-qutrit family; parameter alpha
    Qutrit,
    /// Pure state with Schmidt coefficients `p1,p2,...`
    Schmidt,
    /// Random density operator (`--rank`, `--seed`)
    Random,
    /// Random pure state (`--seed`)
    RandomPure,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(value_enum)]
    family: GenFamily,
    /// Family parameter(s)
    #[arg(allow_hyphen_values = true)]
    params: Option<String>,
    /// Local dimension for werner and isotropic
    #[arg(long)]
    d: Option<usize>,
    /// Dims for schmidt and random states, e.g. `--dims 2,3`
    #[arg(long, value_parser = parse_dims)]
    dims: Option<[usize; 2]>,
    /// Rank of a random density operator (default: full)
    #[arg(long)]
    rank: Option<usize>,
    /// Seed for random states
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output path; standard output when absent
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_dims(s: &str) -> Result<[usize; 2], String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [a, b] = parts[..] else {
        return Err(format!("expected A,B, got `{s}`"));
    };
    let p = |t: &str| {
        t.trim()
            .parse::<usize>()
            .ok()
            .filter(|&x| x >= 1)
            .ok_or_else(|| format!("`{t}` is not a positive integer"))
    };
    Ok([p(a)?, p(b)?])
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(a) => {
            commands::check(&a.load.path, a.load.dims, a.load.tolerances(), a.load.json)
        }
        Command::Sweep(a) => commands::sweep(a.family, a.d, &a.range, a.out.as_deref()),
        Command::Schmidt(a) => commands::schmidt(&a.path, a.dims, a.tolerances(), a.json),
        Command::Oschmidt(a) => commands::oschmidt(&a.path, a.dims, a.tolerances(), a.json),
        Command::Gen(a) => commands::gen(&commands::GenRequest {
            family: a.family,
            params: a.params.as_deref(),
            d: a.d,
            dims: a.dims,
            rank: a.rank,
            seed: a.seed,
            out: a.out.as_deref(),
        }),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ccnr: {e}");
            e.exit_code()
        }
    }
}
