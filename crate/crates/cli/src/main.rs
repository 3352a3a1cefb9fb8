//! `pst`: analyze, design and verify perfect state transfer on
//! pseudo-distance-regular networks.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "pst", version, about = "Perfect qudit state transfer over pseudo-distance-regular networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Stratification, intersection numbers and feasibility.
    Analyze(SourceArgs),
    /// QD parameters, polynomial tables, nodes and weights.
    Spectrum(SourceArgs),
    /// Coupling constants J_0..J_D.
    Design(DesignArgs),
    /// Fidelity curve (CSV) and transfer report.
    Evolve(EvolveArgs),
    /// Dense many-body experiment on the full d^N register.
    Verify(VerifyArgs),
    /// Built-in example networks.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Debug, Subcommand)]
enum CatalogCommand {
    List {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Export {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SourceArgs {
    /// Graph or intersection-array JSON document.
    #[arg(long, required_unless_present = "catalog", conflicts_with = "catalog")]
    pub input: Option<PathBuf>,
    /// Catalog entry name (see `pst catalog list`).
    #[arg(long)]
    pub catalog: Option<String>,
    /// Reference vertex; defaults to the catalog's choice or 0.
    #[arg(long = "ref")]
    pub reference: Option<usize>,
    /// Output directory; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct DesignArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub theta: f64,
    #[arg(long, default_value_t = 1.0)]
    pub t0: f64,
    /// Branch integers l_0,..,l_D (comma separated).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub branch: Option<Vec<i64>>,
    /// c in E_k = c·Σ J_m P_m(x_k): 0.5, 1 or 2.
    #[arg(long, default_value_t = 2.0)]
    pub phase_factor: f64,
    /// Use the catalog's tabulated J-set instead of the computed design.
    #[arg(long)]
    pub paper_couplings: bool,
}

#[derive(Debug, Clone, Args)]
pub struct EvolveArgs {
    #[command(flatten)]
    pub design: DesignArgs,
    /// t_min:t_max:samples; defaults to 0:2·t0:201.
    #[arg(long)]
    pub grid: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub design: DesignArgs,
    /// Levels per site.
    #[arg(long)]
    pub d: usize,
}

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Io(String),
    Infeasible(String),
    Tolerance(String),
    DimensionCap(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Infeasible(_) => 3,
            CliError::Tolerance(_) => 4,
            CliError::DimensionCap(_) => 5,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "invalid input: {m}"),
            CliError::Io(m) => write!(f, "i/o: {m}"),
            CliError::Infeasible(m) => write!(f, "infeasible network: {m}"),
            CliError::Tolerance(m) => write!(f, "tolerance violated: {m}"),
            CliError::DimensionCap(m) => write!(f, "dimension cap: {m}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::tolerances().and_then(|tol| match cli.command {
        Command::Analyze(a) => commands::analyze(&a, &tol),
        Command::Spectrum(a) => commands::spectrum(&a, &tol),
        Command::Design(a) => commands::design(&a, &tol),
        Command::Evolve(a) => commands::evolve(&a, &tol),
        Command::Verify(a) => commands::verify(&a, &tol),
        Command::Catalog(CatalogCommand::List { out }) => commands::catalog_list(out.as_deref()),
        Command::Catalog(CatalogCommand::Export { name, out }) => {
            commands::catalog_export(&name, out.as_deref())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pst: {e}");
            ExitCode::from(e.code())
        }
    }
}
