mod cache;
mod commands;
mod error;
mod range;
mod record;
mod selfcheck;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::{CliError, CliResult};
use range::NRange;

pub const THREADS_ENV: &str = "VCJONES_THREADS";

/// Colored Jones invariants at roots of unity and checks of their asymptotics.
#[derive(Parser, Debug)]
#[command(name = "vcjones", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,

    /// Worker threads (default: $VCJONES_THREADS, then the number of cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Sweep cache directory (default: $VCJONES_CACHE_DIR, then ~/.cache/vcjones).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Do not read or write the sweep cache.
    #[arg(long, global = true)]
    no_cache: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum KnotKind {
    /// Torus knot T(p,q).
    Torus,
    /// Twisted Whitehead link WL(r).
    Wl,
    /// Whitehead double WD(T(p,q), r).
    Wd,
}

#[derive(Args, Debug, Clone)]
pub struct KnotArgs {
    #[arg(long, value_enum)]
    pub knot: KnotKind,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub q: Option<u32>,
    /// Number of twists.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub r: i64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FitTarget {
    /// Slope 8 L(pi/4), the Whitehead link volume.
    WhiteheadVolume,
    /// Slope 0.
    Zero,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExpectB {
    #[value(name = "3pi")]
    ThreePi,
    #[value(name = "4pi")]
    FourPi,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one Kashaev invariant J_{K,N}(e^{2 pi i/N}).
    Eval {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long = "N")]
        n: u64,
    },
    /// Evaluate over a range of N, in parallel and through the cache.
    Sweep {
        #[command(flatten)]
        knot: KnotArgs,
        /// start:end:step
        #[arg(long = "N")]
        n: NRange,
        /// Output file (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit 2 pi log|J| = a N + b log N + c to a sweep CSV.
    Fit {
        /// Sweep CSV; `-` for standard input.
        input: PathBuf,
        #[arg(long, value_enum)]
        target: Option<FitTarget>,
        #[arg(long = "expect-b", value_enum)]
        expect_b: Option<ExpectB>,
        /// Absolute tolerance on a (default 0.018 for whitehead-volume, 0.01 for zero).
        #[arg(long)]
        a_tol: Option<f64>,
        /// Relative tolerance on b.
        #[arg(long, default_value_t = 0.1)]
        b_tol: f64,
    },
    /// Decide A^+_{p,q}(N,k) = 0 exactly over one period of N.
    Nonvanish {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// N^2 max |hat J / t d/dt hat J| over colors near N.
    Ratio {
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, default_value_t = 3)]
        q: u32,
        #[arg(long = "N", conflicts_with = "series", required_unless_present = "series")]
        n: Option<u64>,
        /// Comma-separated orders; prints a trend verdict.
        #[arg(long, value_delimiter = ',')]
        series: Option<Vec<u64>>,
        #[arg(long)]
        delta: f64,
    },
    /// Print 8 L(pi/4), optionally with the WL(0) estimate at one N.
    Volume {
        #[arg(long = "N")]
        n: Option<u64>,
    },
    /// Run the exact-vs-float and identity checks.
    Selfcheck,
}

pub struct RunConfig {
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
}

fn thread_count(flag: Option<usize>) -> CliResult<Option<usize>> {
    if let Some(n) = flag {
        return Ok(Some(n));
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) if !v.trim().is_empty() => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("{THREADS_ENV}={v:?} is not a thread count"))),
        _ => Ok(None),
    }
}

fn run(cli: Cli) -> CliResult<bool> {
    let threads = thread_count(cli.threads)?;
    if threads == Some(0) {
        return Err(CliError::Usage("thread count must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Compute(e.to_string()))?;
    let cfg = RunConfig {
        format: cli.format,
        cache_dir: if cli.no_cache { None } else { cache::default_dir(cli.cache_dir.as_deref()) },
    };
    pool.install(|| match cli.command {
        Command::Eval { knot, n } => commands::eval(&cfg, &knot, n),
        Command::Sweep { knot, n, out } => commands::sweep(&cfg, &knot, n, out.as_deref()),
        Command::Fit { input, target, expect_b, a_tol, b_tol } => {
            commands::fit(&cfg, &input, target, expect_b, a_tol, b_tol)
        }
        Command::Nonvanish { p, q, k } => commands::nonvanish(&cfg, p, q, k),
        Command::Ratio { p, q, n, series, delta } => commands::ratio(&cfg, p, q, n, series, delta),
        Command::Volume { n } => commands::volume(&cfg, n),
        Command::Selfcheck => selfcheck::run(&cfg),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("vcjones: {e}");
            e.exit_code()
        }
    }
}
