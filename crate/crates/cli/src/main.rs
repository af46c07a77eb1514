mod commands;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sdbetti::FieldSpec;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Library(#[from] sdbetti::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    /// A verification check failed; the report has already been written.
    #[error("verification failed")]
    Failed,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(
    name = "sdbetti",
    version,
    about = "Betti tables of Stanley-Reisner rings of subdivided complexes"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Coefficient field: q or gfP.
    #[arg(long, global = true, default_value = "q")]
    pub field: FieldSpec,
    /// Largest vertex count enumerated by Hochster's formula.
    #[arg(long, global = true, env = "SDBETTI_GATE", default_value_t = sdbetti::hochster::DEFAULT_VERTEX_GATE)]
    pub gate: usize,
    /// Worker threads; output does not depend on it.
    #[arg(long, global = true, env = "SDBETTI_WORKERS")]
    pub workers: Option<usize>,
    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    #[value(alias = "barycentric")]
    Bary,
    #[value(alias = "edge")]
    Edgewise,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// f-vector, homology and combinatorial invariants of a complex.
    Info { file: PathBuf },
    /// Barycentric or edgewise subdivision, written as JSON.
    Subdivide {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, default_value_t = 1)]
        r: u32,
    },
    /// Full graded Betti table.
    Betti {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Strand endpoints, gaps, regularity, depth and t_1.
    Strands { file: PathBuf },
    #[command(subcommand)]
    Limits(LimitsCommand),
    #[command(subcommand)]
    Generate(GenerateCommand),
    /// Run a verification suite and print its JSON report.
    Verify(VerifyArgs),
    /// Fast end-to-end check of the build.
    Selftest {
        /// Directory holding c6.json and tri.json.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[arg(long, hide = true)]
        inject_fault: Option<Fault>,
    },
}

#[derive(Subcommand, Debug)]
pub enum LimitsCommand {
    /// The matrix of interior face counts and its eigendecomposition.
    Lambda {
        #[arg(long)]
        d: usize,
    },
    /// Limit polynomial of the rescaled f-vector under iterated subdivision.
    Polynomial { file: PathBuf },
    /// Limiting share of the last strand.
    Ratio { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum GenerateCommand {
    /// Sphere plus stacked simplices with last-strand limit p/q.
    LimitExample {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        scale: Option<usize>,
    },
    /// A named complex such as cycle(6) or stacked_attach(cycle(3),2,[0]).
    Fixture { spec: String },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Mj,
    ThmBar,
    Edgewise,
    Gorenstein,
    Link,
    Reg,
    DepthInvariance,
    Appendix,
    LastStrand,
    Limits,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    WrongMj,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Dimensions d = dim + 1, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub d: Vec<usize>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long)]
    pub dmax: Option<usize>,
}

fn run(cli: Cli) -> CliResult<()> {
    if cli.global.gate == 0 {
        return Err(CliError::Config("gate must be at least 1".into()));
    }
    if let Some(w) = cli.global.workers {
        if w == 0 {
            return Err(CliError::Config("worker count must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .map_err(|e| CliError::Config(e.to_string()))?;
    }
    commands::dispatch(&cli.global, cli.command)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("sdbetti: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
