//! Command-line front end: select from files, verify against the oracle,
//! sweep cache configurations, and dump the permuted views.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;
use xyselect::fj::Outcome;
use xyselect::iosim::{CacheConfig, Tracer, Untracked};
use xyselect::oracle::{brute_force_kth, gen_instance, gen_sized, Instance};
use xyselect::permute::build_views;
use xyselect::{select_with, ExtendedValue, SortedInput, Strategy};

pub const CSV_HEADER: &str = "algo,n,k,B,M,accesses,misses,elapsed_ns,result";

#[derive(Debug, Parser)]
#[command(name = "xyselect", version, about = "Selection in sorted X+Y matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the k-th smallest X[i] + Y[j] for two files of sorted numbers.
    Select {
        x: PathBuf,
        y: PathBuf,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        /// Print per-iteration diagnostics to stderr.
        #[arg(short, long)]
        verbose: bool,
    },
    /// Compare both drivers against the brute-force oracle on random instances.
    Verify {
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
    },
    /// Count simulated cache misses over a sweep of sizes and cache shapes.
    Bench {
        /// Input sizes.
        #[arg(long = "n", required = true, num_args = 1.., value_delimiter = ',')]
        n: Vec<usize>,
        /// Block sizes B in words, paired index-wise with --capacity.
        #[arg(long = "block", required = true, num_args = 1.., value_delimiter = ',')]
        block: Vec<usize>,
        /// Cache capacities M in words, paired index-wise with --block.
        #[arg(long = "capacity", required = true, num_args = 1.., value_delimiter = ',')]
        capacity: Vec<usize>,
        #[arg(long = "algo", num_args = 1.., value_delimiter = ',', default_values_t = [Algo::Co, Algo::Naive])]
        algo: Vec<Algo>,
        /// Rank to select; defaults to the median ⌈n²/2⌉.
        #[arg(long)]
        k: Option<u64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Output CSV path; `-` writes to stdout.
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Show which input element lands in each meaningful slot of X1 and X2.
    Permute { x: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Co,
    Naive,
}

impl Algo {
    pub fn strategy(self) -> Strategy {
        match self {
            Algo::Co => Strategy::CacheOblivious,
            Algo::Naive => Strategy::Naive,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algo::Co => "co",
            Algo::Naive => "naive",
        }
    }
}

impl std::fmt::Display for Algo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {message}")]
    Input { path: String, message: String },
    #[error(transparent)]
    Select(#[from] xyselect::Error),
    /// Verification found a disagreement; already reported.
    #[error("verification failed")]
    Mismatch,
}

impl CliError {
    /// 0 success, 1 verification failure, 2 usage or input error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch => 1,
            CliError::Select(xyselect::Error::Invariant(_)) => 1,
            _ => 2,
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Select { x, y, k, verbose } => cmd_select(&x, &y, k, verbose, out),
        Command::Verify { trials, seed, max_n } => {
            let summary = cmd_verify(trials, seed, max_n as usize, default_selector, out)?;
            if summary.failed > 0 {
                Err(CliError::Mismatch)
            } else {
                Ok(())
            }
        }
        Command::Bench { n, block, capacity, algo, k, seed, out: path } => {
            let csv = cmd_bench(&n, &block, &capacity, &algo, k, seed)?;
            if path.as_os_str() == "-" {
                out.write_all(csv.as_bytes()).map_err(|e| io_err(&path, e))
            } else {
                std::fs::write(&path, csv).map_err(|e| io_err(&path, e))
            }
        }
        Command::Permute { x } => cmd_permute(&x, out),
    }
}

fn io_err(path: &Path, source: std::io::Error) -> CliError {
    CliError::Io { path: path.display().to_string(), source }
}

/// Reads whitespace-separated decimal numbers.
pub fn read_values(path: &Path) -> Result<Vec<f64>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    text.split_whitespace()
        .enumerate()
        .map(|(i, tok)| {
            tok.parse::<f64>().map_err(|_| CliError::Input {
                path: path.display().to_string(),
                message: format!("token {i} ({tok:?}) is not a number"),
            })
        })
        .collect()
}

fn read_input(path: &Path) -> Result<SortedInput, CliError> {
    SortedInput::new(read_values(path)?)
        .map_err(|e| CliError::Input { path: path.display().to_string(), message: e.to_string() })
}

fn write(out: &mut dyn Write, s: &str) -> Result<(), CliError> {
    out.write_all(s.as_bytes()).map_err(|e| io_err(Path::new("<stdout>"), e))
}

pub fn cmd_select(x: &Path, y: &Path, k: u64, verbose: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let xs = read_input(x)?;
    let ys = read_input(y)?;
    let n = xs.padded_len().max(ys.padded_len());
    let (xs, ys) = (xs.with_padded_len(n), ys.with_padded_len(n));
    let outcome = select_with(&xs, &ys, k, Strategy::CacheOblivious, &Untracked)?;
    if verbose {
        for it in &outcome.iterations {
            eprintln!(
                "p={} cells={} split={} q={} r={} survivors={} k={}",
                it.p, it.cells, it.split, it.q, it.r, it.survivors, it.k
            );
        }
    }
    write(out, &format!("{}\n", outcome.value))
}

/// Runs one driver on an instance.
pub type Selector = fn(&Instance, Strategy) -> xyselect::Result<Outcome>;

pub fn default_selector(inst: &Instance, strategy: Strategy) -> xyselect::Result<Outcome> {
    select_with(&inst.x, &inst.y, inst.k, strategy, &Untracked)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifySummary {
    pub passed: u64,
    pub failed: u64,
    /// Iterations checked against `|C_{p+1}| ≤ 2·L_p`.
    pub iterations_checked: u64,
    pub reproducers: Vec<String>,
}

/// Duplicate bias used for trial `t`; cycles through distinct, mixed and
/// constant inputs.
pub fn trial_bias(t: u64) -> f64 {
    [0.0, 0.3, 0.7, 1.0][(t % 4) as usize]
}

pub fn cmd_verify(
    trials: u64,
    seed: u64,
    max_n: usize,
    selector: Selector,
    out: &mut dyn Write,
) -> Result<VerifySummary, CliError> {
    if trials == 0 || max_n == 0 {
        return Err(CliError::Usage("trials and max-n must be positive".into()));
    }
    let mut summary = VerifySummary::default();
    for t in 0..trials {
        let trial_seed = seed.wrapping_add(t);
        let bias = trial_bias(t);
        let inst = gen_instance(trial_seed, max_n, bias);
        let want = brute_force_kth(inst.x.values(), inst.y.values(), inst.k)?;
        let mut problems = String::new();
        for strategy in [Strategy::CacheOblivious, Strategy::Naive] {
            match selector(&inst, strategy) {
                Ok(o) => {
                    if o.value != want {
                        let _ = write!(problems, " {strategy:?}={}", o.value);
                    }
                    for it in &o.iterations {
                        summary.iterations_checked += 1;
                        if it.survivors as u64 > 2 * it.l {
                            let _ = write!(problems, " {strategy:?}:|C|={}>2L={}@p={}", it.survivors, 2 * it.l, it.p);
                        }
                    }
                }
                Err(e) => {
                    let _ = write!(problems, " {strategy:?} error: {e}");
                }
            }
        }
        if problems.is_empty() {
            summary.passed += 1;
        } else {
            summary.failed += 1;
            let line = format!(
                "mismatch: seed={trial_seed} max_n={max_n} bias={bias} m={} n={} k={} oracle={want}{problems}",
                inst.x.len(),
                inst.y.len(),
                inst.k
            );
            write(out, &format!("{line}\n"))?;
            summary.reproducers.push(line);
        }
    }
    write(out, &format!("{} passed, {} failed\n", summary.passed, summary.failed))?;
    Ok(summary)
}

/// One CSV row per `(algo, n, (B, M))`; the header is included.
pub fn cmd_bench(
    sizes: &[usize],
    blocks: &[usize],
    capacities: &[usize],
    algos: &[Algo],
    k: Option<u64>,
    seed: u64,
) -> Result<String, CliError> {
    if sizes.is_empty() || algos.is_empty() {
        return Err(CliError::Usage("need at least one size and one algorithm".into()));
    }
    if blocks.len() != capacities.len() || blocks.is_empty() {
        return Err(CliError::Usage(format!(
            "{} block sizes but {} capacities; they are paired index-wise",
            blocks.len(),
            capacities.len()
        )));
    }
    let configs = blocks
        .iter()
        .zip(capacities)
        .map(|(&b, &m)| CacheConfig::new(b, m).map_err(|e| CliError::Usage(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(&bad) = sizes.iter().find(|&&n| n == 0) {
        return Err(CliError::Usage(format!("size {bad} must be positive")));
    }

    let mut csv = format!("{CSV_HEADER}\n");
    for &algo in algos {
        for &n in sizes {
            let (x, y) = gen_sized(seed, n);
            let k = k.unwrap_or_else(|| (n as u64 * n as u64).div_ceil(2));
            let start = Instant::now();
            select_with(&x, &y, k, algo.strategy(), &Untracked)?;
            let elapsed = start.elapsed().as_nanos();
            let tracer = Tracer::new(&configs);
            let outcome = select_with(&x, &y, k, algo.strategy(), &tracer)?;
            for stats in tracer.stats() {
                let _ = writeln!(
                    csv,
                    "{},{},{},{},{},{},{},{},{}",
                    algo,
                    n,
                    k,
                    stats.config.block_words(),
                    stats.config.capacity_words(),
                    stats.total.accesses,
                    stats.total.misses,
                    elapsed,
                    outcome.value
                );
            }
        }
    }
    Ok(csv)
}

pub fn cmd_permute(x: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let xs = read_input(x)?;
    let n = xs.padded_len();
    let views = build_views(&xs, &xs)?;
    let levels = n.trailing_zeros();
    if levels < 2 {
        return write(out, &format!("N = {n}: no meaningful slots\n"));
    }
    let mut text = format!("N = {n}\nview slot source value\n");
    for (name, view, shift) in [("X1", &views.x1, 0), ("X2", &views.x2, 1)] {
        for p in 1..levels {
            for i in 1..=(1usize << (p - 1)) {
                let slot = (1 << (p - 1)) + i - 1;
                let source = (2 * i - 1) * (n >> p) - shift;
                let value: ExtendedValue = view.untracked()[slot];
                let _ = writeln!(text, "{name} {slot} {source} {value}");
            }
        }
    }
    write(out, &text)
}
