//! `quotatope`: datasets and verification suites for quota complexes.

mod commands;
mod error;
mod svg;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::{usage, CliResult};
use table::Format;

#[derive(Debug, Parser)]
#[command(name = "quotatope", version, about = "Topology of quota complexes: datasets and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Face counts, homology, ratios and slope fits for a sequence complex.
    Seq(SeqArgs),
    /// chi(Prime(q)) for 3 <= q <= qmax.
    Euler(EulerArgs),
    /// ln|chi(LogPrime(q))| samples and the growth diagnostic.
    Logprime(LogprimeArgs),
    /// Divisor complexes Div(n) and their bouquet profiles.
    Divisor(DivisorArgs),
    /// Coefficients of the Euler-characteristic generating function.
    Series(SeriesArgs),
    /// Expected homology of a random quota complex, exact and Monte Carlo.
    Random(RandomArgs),
    /// Run a consistency suite and report pass/fail.
    Verify(VerifyArgs),
    /// Homotopy type of one scalar quota complex.
    Bouquet(BouquetArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output file; standard output when omitted.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Also write an SVG scatter plot of the data to this path.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SeqKind {
    Primes,
    Squares,
    Cubes,
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    #[arg(value_enum)]
    pub kind: SeqKind,
    /// Largest quota; the sequence is every member below it.
    #[arg(long = "qmax")]
    pub q_max: u64,
    /// Largest face dimension counted.
    #[arg(long = "imax")]
    pub i_max: usize,
    /// Output directory; defaults to `seq-<kind>`.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Also write SVG scatter plots next to the tables.
    #[arg(long)]
    pub svg: bool,
}

#[derive(Debug, Args)]
pub struct EulerArgs {
    #[arg(long = "qmax")]
    pub q_max: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct LogprimeArgs {
    #[arg(long = "qlo", default_value_t = 7.0)]
    pub q_lo: f64,
    /// Largest quota; defaults to ln(nmax + 1).
    #[arg(long = "qhi")]
    pub q_hi: Option<f64>,
    /// Möbius sieve size.
    #[arg(long = "nmax", default_value_t = 1_000_000)]
    pub n_max: u64,
    #[arg(long, default_value_t = 2000)]
    pub samples: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DivisorArgs {
    #[arg(long = "nmin", default_value_t = 2)]
    pub n_min: u64,
    /// Exclusive upper bound on n.
    #[arg(long = "nmax")]
    pub n_max: u64,
    /// Odd n only.
    #[arg(long)]
    pub odd: bool,
    /// Only rows with a non-contractible complex.
    #[arg(long)]
    pub noncontractible: bool,
    /// List non-contractible n without computing their spheres.
    #[arg(long, conflicts_with = "noncontractible")]
    pub list: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SeriesExample {
    /// Weights 1, 2, 3, ... once each.
    Counting,
    /// Weights 1, 2, 3, ... 24 times each; the coefficients are tau(n).
    Tau,
    /// tau(n) against chi, listing any n with tau(n) = 0.
    Lehmer,
    /// Weights the primes.
    Primes,
    /// Partition numbers from the reciprocal of the counting product.
    Partitions,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(value_enum)]
    pub example: SeriesExample,
    #[arg(long, default_value_t = 100)]
    pub degree: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    /// JSON spec file.
    pub spec: PathBuf,
    /// Overrides the spec's trial count.
    #[arg(long)]
    pub trials: Option<u64>,
    /// Overrides the spec's seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Lattice step of the convolution; defaults to m/1000.
    #[arg(long)]
    pub step: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Bouquet signature against explicit homology.
    ShellTheorem,
    /// Complexes rebuilt as vector quota complexes.
    Realization,
    /// Three computations of chi(Prime(q)).
    EulerMobius,
    /// chi(LogPrime) against 1 - M(N).
    Mertens,
    /// Product identity and weight recovery.
    GeneratingFunction,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct BouquetArgs {
    /// Comma-separated weights; integers, fractions or decimals.
    #[arg(long, value_delimiter = ',', required = true)]
    pub weights: Vec<String>,
    #[arg(long)]
    pub quota: String,
    /// Vertex used as the minimum; any minimal-weight vertex works.
    #[arg(long)]
    pub vmin: Option<usize>,
}

fn configure_threads() -> CliResult {
    let Ok(raw) = std::env::var("QUOTATOPE_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| usage(format!("QUOTATOPE_THREADS={raw:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| usage(format!("cannot configure {n} threads: {e}")))
}

fn run(cli: Cli) -> CliResult {
    configure_threads()?;
    match cli.command {
        Command::Seq(a) => commands::seq::run(&a),
        Command::Euler(a) => commands::arith::euler(&a),
        Command::Logprime(a) => commands::arith::logprime(&a),
        Command::Divisor(a) => commands::arith::divisor(&a),
        Command::Series(a) => commands::series::run(&a),
        Command::Random(a) => commands::random::run(&a),
        Command::Verify(a) => commands::verify::run(&a),
        Command::Bouquet(a) => commands::bouquet::run(&a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("quotatope: {e}");
            e.exit_code()
        }
    }
}
