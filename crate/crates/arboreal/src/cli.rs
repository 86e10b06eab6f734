//! The `arboreal` command line.
//!
//! Every run is parsed into a validated [`RunConfig`] and executed by [`run`].
//! Output is CSV or JSON on stdout (or `--output`), progress goes to stderr.
//! Exit status is 0 on success, 1 for an invalid configuration and 2 when a
//! size limit is exceeded.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;

use crate::density::{
    exact_wreath_type_distribution, frobenius_histogram, sieve_primes, stable_scan, surjectivity_score,
    wreath_type_distribution_seeded, TypeDistribution,
};
use crate::error::{Error, Result};
use crate::generic::{
    exceptional_growth_curve, sample_generic_density_seeded, write_reports_csv, ClassifierMode,
};
use crate::polyseq::IntPolySeqSpec;
use crate::wreath::{enumerate, estimate_full_cycle_ratio_seeded, full_cycle_count, group_order, group_order_u64, SphericalIndex};

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Enumeration stops with exit status 2 past this many elements by default.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 1_000_000;

/// Exact wreath references up to this order; larger ones are sampled.
const EXACT_REFERENCE_ORDER: u64 = 50_000;

const SPEC_HELP: &str = "Sequence spec: const:<poly> | fmf:<p> | file:<path> | list:<poly>;<poly>.. | \
random:<index>:<N>:<seed>. Polynomials are coefficient lists with the constant term first \
(\"-2,0,1\") or expressions such as \"x^2-2\" or \"x^2 + 3*x - 1\"";

#[derive(Debug, Parser)]
#[command(name = "arboreal", version, about = "Wreath-product cycle statistics and Frobenius densities of iterated polynomial compositions")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads; 0 uses every core. Results do not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Group,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Group {
    /// Wreath-product counts, enumeration and sampling.
    #[command(subcommand)]
    Wreath(WreathCmd),
    /// Stable-prime scans.
    #[command(subcommand)]
    Scan(ScanCmd),
    /// Frobenius decomposition-type statistics.
    #[command(subcommand)]
    Frob(FrobCmd),
    /// Box sampling of Galois images.
    #[command(subcommand)]
    Generic(GenericCmd),
}

#[derive(Debug, Args)]
struct IndexArg {
    /// Spherical index, e.g. 2,3.
    #[arg(long)]
    index: String,
}

#[derive(Debug, Args)]
struct SpecArg {
    #[arg(long, help = SPEC_HELP, conflicts_with = "spec_file", required_unless_present = "spec_file")]
    spec: Option<String>,
    /// File with one polynomial per line.
    #[arg(long)]
    spec_file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum WreathCmd {
    /// Group order, full-cycle count and their ratio.
    Count(IndexArg),
    /// Every element with its leaf cycle type.
    Enumerate {
        #[command(flatten)]
        index: IndexArg,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        limit: u64,
    },
    /// Monte Carlo full-cycle frequency.
    SampleRatio {
        #[command(flatten)]
        index: IndexArg,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
    },
}

#[derive(Debug, Subcommand)]
enum ScanCmd {
    /// Per-level densities of primes keeping the composition irreducible.
    Stable {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        pmax: u64,
    },
}

#[derive(Debug, Args)]
struct FrobArgs {
    #[command(flatten)]
    spec: SpecArg,
    /// Level of the composition.
    #[arg(long)]
    n: usize,
    #[arg(long)]
    pmax: u64,
}

#[derive(Debug, Subcommand)]
enum FrobCmd {
    /// Histogram of decomposition types of the level-n composition.
    Hist(FrobArgs),
    /// Distance between that histogram and the wreath cycle-type distribution.
    Compare {
        #[command(flatten)]
        args: FrobArgs,
        /// Samples for the wreath reference when it is too large to enumerate.
        #[arg(long, default_value_t = 200_000)]
        samples: u64,
    },
}

#[derive(Debug, Args)]
struct ModeArgs {
    /// Exact Galois classification (indices 2 and 2,2); the default.
    #[arg(long, conflicts_with = "heuristic")]
    exact: bool,
    /// Judge each level by Frobenius statistics.
    #[arg(long)]
    heuristic: bool,
    /// Prime bound for --heuristic.
    #[arg(long, default_value_t = ClassifierMode::DEFAULT_PRIME_BOUND)]
    heuristic_pmax: u64,
    /// Largest total variation distance accepted by --heuristic.
    #[arg(long, default_value_t = ClassifierMode::DEFAULT_TOLERANCE)]
    tolerance: f64,
}

#[derive(Debug, Subcommand)]
enum GenericCmd {
    /// Fraction of random box sequences with maximal Galois image.
    Sample {
        #[command(flatten)]
        index: IndexArg,
        /// Coefficient bound N.
        #[arg(long = "box")]
        bound: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Exhaustive exceptional counts for several box sizes.
    Curve {
        #[arg(long, default_value = "2,2")]
        index: String,
        /// Box sizes, e.g. 5,10,15.
        #[arg(long = "box", value_delimiter = ',', required = true)]
        bounds: Vec<u64>,
    },
}

/// A validated command.
#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    WreathCount { index: SphericalIndex },
    WreathEnumerate { index: SphericalIndex, limit: u64 },
    WreathSampleRatio { index: SphericalIndex, samples: u64 },
    ScanStable { spec: IntPolySeqSpec, n_max: usize, p_max: u64 },
    FrobHist { spec: IntPolySeqSpec, n: usize, p_max: u64 },
    FrobCompare { spec: IntPolySeqSpec, n: usize, p_max: u64, samples: u64 },
    GenericSample { index: SphericalIndex, bound: u64, samples: u64, mode: ClassifierMode },
    GenericCurve { index: SphericalIndex, bounds: Vec<u64> },
}

/// Everything a run needs, checked before any work starts.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub seed: u64,
    pub threads: usize,
    pub format: Format,
    pub output: Option<PathBuf>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn parse_index(s: &str) -> Result<SphericalIndex> {
    let index: SphericalIndex = s.parse()?;
    if index.depth() == 0 {
        return Err(Error::InvalidIndex("the index must have at least one level".into()));
    }
    Ok(index)
}

fn parse_spec(a: SpecArg) -> Result<IntPolySeqSpec> {
    match (a.spec, a.spec_file) {
        (Some(s), _) => s.parse(),
        (None, Some(path)) => IntPolySeqSpec::from_list_file(&path),
        (None, None) => Err(invalid("a sequence spec is required")),
    }
}

fn positive(name: &str, v: u64) -> Result<u64> {
    if v == 0 {
        return Err(invalid(format!("--{name} must be positive")));
    }
    Ok(v)
}

fn levels(spec: &IntPolySeqSpec, name: &str, n: usize) -> Result<usize> {
    positive(name, n as u64)?;
    spec.spherical_index(n)?;
    Ok(n)
}

fn prime_bound(p: u64) -> Result<u64> {
    if p < 3 {
        return Err(invalid("--pmax must be at least 3"));
    }
    Ok(p)
}

impl TryFrom<Cli> for RunConfig {
    type Error = Error;

    fn try_from(cli: Cli) -> Result<Self> {
        let command = match cli.command {
            Group::Wreath(WreathCmd::Count(i)) => Command::WreathCount { index: parse_index(&i.index)? },
            Group::Wreath(WreathCmd::Enumerate { index, limit }) => {
                Command::WreathEnumerate { index: parse_index(&index.index)?, limit }
            }
            Group::Wreath(WreathCmd::SampleRatio { index, samples }) => {
                Command::WreathSampleRatio { index: parse_index(&index.index)?, samples: positive("samples", samples)? }
            }
            Group::Scan(ScanCmd::Stable { spec, nmax, pmax }) => {
                let spec = parse_spec(spec)?;
                Command::ScanStable { n_max: levels(&spec, "nmax", nmax)?, p_max: prime_bound(pmax)?, spec }
            }
            Group::Frob(FrobCmd::Hist(a)) => {
                let spec = parse_spec(a.spec)?;
                Command::FrobHist { n: levels(&spec, "n", a.n)?, p_max: prime_bound(a.pmax)?, spec }
            }
            Group::Frob(FrobCmd::Compare { args, samples }) => {
                let spec = parse_spec(args.spec)?;
                Command::FrobCompare {
                    n: levels(&spec, "n", args.n)?,
                    p_max: prime_bound(args.pmax)?,
                    samples: positive("samples", samples)?,
                    spec,
                }
            }
            Group::Generic(GenericCmd::Sample { index, bound, samples, mode }) => {
                let mode = if mode.heuristic {
                    if !(0.0..=1.0).contains(&mode.tolerance) {
                        return Err(invalid("--tolerance must lie in [0, 1]"));
                    }
                    ClassifierMode::Heuristic { prime_bound: prime_bound(mode.heuristic_pmax)?, tolerance: mode.tolerance }
                } else {
                    ClassifierMode::Exact
                };
                Command::GenericSample { index: parse_index(&index.index)?, bound, samples: positive("samples", samples)?, mode }
            }
            Group::Generic(GenericCmd::Curve { index, bounds }) => {
                Command::GenericCurve { index: parse_index(&index)?, bounds }
            }
        };
        Ok(RunConfig { command, seed: cli.seed, threads: cli.threads, format: cli.format, output: cli.output })
    }
}

impl RunConfig {
    /// Parses and validates a full argument list, program name first.
    pub fn from_args<I, T>(args: I) -> std::result::Result<Self, ParseOutcome>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args).map_err(|e| match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                ParseOutcome::Display(e.to_string())
            }
            _ => ParseOutcome::Invalid(e.to_string()),
        })?;
        RunConfig::try_from(cli).map_err(|e| ParseOutcome::Invalid(format!("error: {e}\n")))
    }
}

/// Why [`RunConfig::from_args`] produced no configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseOutcome {
    /// Help or version text was requested.
    Display(String),
    Invalid(String),
}

/// Exit status for a failed run.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::OrderExceedsLimit { .. } | Error::DegreeLimitExceeded { .. } => 2,
        _ => 1,
    }
}

fn json<W: Write + ?Sized, T: Serialize>(out: &mut W, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn csv_rows<W: Write, T: Serialize>(out: W, rows: impl IntoIterator<Item = T>) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct CountRow {
    index: String,
    order: String,
    full_cycles: String,
    ratio: String,
}

#[derive(Serialize)]
struct ElementRow {
    element: String,
    leaf_permutation: String,
    cycle_type: String,
    full_cycle: bool,
}

#[derive(Serialize)]
struct RatioRow {
    index: String,
    samples: u64,
    hits: u64,
    ratio: f64,
    stderr: f64,
    predicted: f64,
    z: f64,
}

#[derive(Serialize)]
struct TypeRow {
    #[serde(rename = "type")]
    cycle_type: String,
    count: u64,
    frequency: f64,
}

#[derive(Serialize)]
struct CompareRow {
    spec: String,
    n: usize,
    #[serde(rename = "X")]
    bound: u64,
    good_primes: u64,
    tv_distance: f64,
    full_cycle_frequency: f64,
    predicted_full_cycle: f64,
    full_cycle_z: f64,
}

fn reduced_ratio(num: &BigUint, den: &BigUint) -> String {
    let g = num.gcd(den);
    format!("{}/{}", num / &g, den / &g)
}

fn wreath_reference(index: &SphericalIndex, samples: u64, seed: u64, threads: usize) -> Result<TypeDistribution> {
    match group_order_u64(index) {
        Some(order) if order <= EXACT_REFERENCE_ORDER => exact_wreath_type_distribution(index, order),
        _ => Ok(wreath_type_distribution_seeded(index, samples, seed, threads)),
    }
}

/// Executes a validated configuration, writing the report to `out` and
/// progress lines to `log`.
pub fn run(config: &RunConfig, out: &mut dyn Write, log: &mut dyn Write) -> Result<()> {
    let RunConfig { seed, threads, format, .. } = *config;
    match &config.command {
        Command::WreathCount { index } => {
            let order = group_order(index);
            let full = full_cycle_count(index);
            let row = CountRow {
                index: index.to_string(),
                ratio: reduced_ratio(&full, &order),
                order: order.to_string(),
                full_cycles: full.to_string(),
            };
            match format {
                Format::Csv => csv_rows(out, [row]),
                Format::Json => json(out, &row),
            }
        }
        Command::WreathEnumerate { index, limit } => {
            let rows = enumerate(index, *limit)?.map(|a| ElementRow {
                element: serde_json::to_string(&a).expect("elements serialize"),
                leaf_permutation: format!("{:?}", a.leaf_permutation()),
                cycle_type: a.leaf_cycle_type().to_string(),
                full_cycle: a.is_full_cycle_recursive(),
            });
            match format {
                Format::Csv => csv_rows(out, rows),
                Format::Json => json(out, &rows.collect::<Vec<_>>()),
            }
        }
        Command::WreathSampleRatio { index, samples } => {
            writeln!(log, "sampling {samples} elements of W{index}")?;
            let est = estimate_full_cycle_ratio_seeded(index, *samples, seed, threads);
            let predicted = 1.0 / index.leaf_count() as f64;
            let row = RatioRow {
                index: index.to_string(),
                samples: est.samples,
                hits: est.hits,
                ratio: est.ratio,
                stderr: est.stderr,
                predicted,
                z: est.z_score(predicted),
            };
            match format {
                Format::Csv => csv_rows(out, [row]),
                Format::Json => json(out, &row),
            }
        }
        Command::ScanStable { spec, n_max, p_max } => {
            let range = sieve_primes(*p_max)?;
            writeln!(log, "scanning {} odd primes up to {p_max} for {spec}, levels 1..={n_max}", range.len())?;
            let report = stable_scan(spec, *n_max, &range, threads)?;
            match format {
                Format::Csv => report.write_csv(out),
                Format::Json => json(out, &report),
            }
        }
        Command::FrobHist { spec, n, p_max } => {
            let range = sieve_primes(*p_max)?;
            writeln!(log, "factoring level {n} of {spec} modulo {} odd primes", range.len())?;
            let hist = frobenius_histogram(spec, *n, &range, threads)?;
            match format {
                Format::Csv => csv_rows(
                    out,
                    hist.distribution.iter().map(|(t, c)| TypeRow {
                        cycle_type: t.to_string(),
                        count: c,
                        frequency: hist.distribution.frequency(t),
                    }),
                ),
                Format::Json => json(out, &hist),
            }
        }
        Command::FrobCompare { spec, n, p_max, samples } => {
            let range = sieve_primes(*p_max)?;
            writeln!(log, "factoring level {n} of {spec} modulo {} odd primes", range.len())?;
            let hist = frobenius_histogram(spec, *n, &range, threads)?;
            let reference = wreath_reference(&spec.spherical_index(*n)?, *samples, seed, threads)?;
            let score = surjectivity_score(&hist, &reference)?;
            match format {
                Format::Csv => csv_rows(
                    out,
                    [CompareRow {
                        spec: spec.to_string(),
                        n: *n,
                        bound: *p_max,
                        good_primes: hist.distribution.total(),
                        tv_distance: score.tv_distance,
                        full_cycle_frequency: score.full_cycle_frequency,
                        predicted_full_cycle: score.predicted_full_cycle,
                        full_cycle_z: score.full_cycle_z,
                    }],
                ),
                Format::Json => {
                    #[derive(Serialize)]
                    struct Comparison<'a> {
                        histogram: &'a crate::density::FrobHistogram,
                        reference: &'a TypeDistribution,
                        score: crate::density::SurjectivityScore,
                    }
                    json(out, &Comparison { histogram: &hist, reference: &reference, score })
                }
            }
        }
        Command::GenericSample { index, bound, samples, mode } => {
            writeln!(log, "sampling {samples} sequences of index {index} from the box N = {bound} ({})", mode.name())?;
            let report = sample_generic_density_seeded(index, *bound, *samples, *mode, seed, threads)?;
            match format {
                Format::Csv => write_reports_csv(&[report], out),
                Format::Json => json(out, &report),
            }
        }
        Command::GenericCurve { index, bounds } => {
            writeln!(log, "exhaustive count over the boxes {bounds:?} for index {index}")?;
            let curve = exceptional_growth_curve(index, bounds, threads)?;
            match format {
                Format::Csv => curve.write_csv(out),
                Format::Json => json(out, &curve),
            }
        }
    }
}

/// Parses `args`, runs, and returns the process exit status.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::from_args(args) {
        Ok(c) => c,
        Err(ParseOutcome::Display(text)) => {
            let _ = write!(stdout, "{text}");
            return 0;
        }
        Err(ParseOutcome::Invalid(msg)) => {
            let _ = write!(stderr, "{msg}");
            return 1;
        }
    };
    let result = match &config.output {
        Some(path) => File::create(path).map_err(Error::from).and_then(|f| {
            let mut w = BufWriter::new(f);
            run(&config, &mut w, stderr)?;
            w.flush().map_err(Error::from)
        }),
        None => {
            let mut w = BufWriter::new(stdout);
            run(&config, &mut w, stderr).and_then(|_| w.flush().map_err(Error::from))
        }
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Entry point of the `arboreal` binary.
pub fn main() -> i32 {
    main_with_args(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = main_with_args(std::iter::once("arboreal").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn wreath_count_two_three() {
        let (code, out, _) = run_args(&["wreath", "count", "--index", "2,3"]);
        assert_eq!(code, 0);
        assert_eq!(out, "index,order,full_cycles,ratio\n\"(2,3)\",72,12,1/6\n");
    }

    #[test]
    fn invalid_index_exits_one() {
        let (code, out, err) = run_args(&["wreath", "count", "--index", "2,0"]);
        assert_eq!(code, 1);
        assert!(out.is_empty());
        assert!(err.contains("error"));
    }

    #[test]
    fn enumeration_limit_exits_two() {
        let (code, _, err) = run_args(&["wreath", "enumerate", "--index", "3,3", "--limit", "100"]);
        assert_eq!(code, 2);
        assert!(err.contains("exceeds"));
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_args(&["wreath"]).0, 1);
        assert_eq!(run_args(&["scan", "stable", "--spec", "const:x^2-2", "--nmax", "0", "--pmax", "100"]).0, 1);
        assert_eq!(run_args(&["--help"]).0, 0);
    }
}
