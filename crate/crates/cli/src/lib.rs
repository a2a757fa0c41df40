//! Command-line front end: argument parsing, datum loading, the rank cache
//! file and report rendering. `main.rs` only maps [`run`] onto the process.

pub mod cache;
pub mod document;
pub mod error;
pub mod selftest;
pub mod source;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopfmin_core::hilbert::{dominance_verdict, GrowthParams};
use hopfmin_core::scalar::Field;
use hopfmin_core::shapovalov::{gram_determinant, BlockOptions, RankCache, DEFAULT_BLOCK_LIMIT};
use hopfmin_core::sl2::parallel_report;
use hopfmin_core::{Datum, MultiDegree, Scalar};

pub use document::ResultDocument;
pub use error::CliError;

use cache::FileCache;
use document::{deg_text, BlockEntry};
use selftest::{run_selftest, SelftestOptions};
use source::{parse_base, read_datum_file, specialize_datum, Preset};

#[derive(Debug, Parser)]
#[command(name = "hopfmin", version, about = "Graded dimensions of braided symmetrizer images")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert table and growth verdict of a datum.
    Analyze(AnalyzeArgs),
    /// Determinant of one symmetrizer block.
    Det(DetArgs),
    /// sl2 highest-weight report for a rational weight.
    Sl2(Sl2Args),
    /// Run the oracle suites.
    Selftest(SelftestArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Args)]
pub struct DatumArgs {
    /// Datum file (JSON).
    #[arg(long, conflicts_with = "preset", required_unless_present = "preset")]
    pub datum: Option<PathBuf>,
    /// cartan:<T>, reductive:<T>roots or doubled:<T> with T in A1, A2, A1xA1, B2, G2.
    #[arg(long)]
    pub preset: Option<String>,
    /// Base of the preset points, a literal in t.
    #[arg(long, default_value = "t")]
    pub base: String,
    /// Send t to a primitive N-th root of unity before computing.
    #[arg(long, value_name = "N")]
    pub specialize: Option<u32>,
}

#[derive(Debug, Args)]
pub struct BlockArgs {
    /// Largest number of words allowed in one block.
    #[arg(long, default_value_t = DEFAULT_BLOCK_LIMIT)]
    pub max_words: usize,
    /// Worker threads; defaults to all cores.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub datum: DatumArgs,
    #[command(flatten)]
    pub blocks: BlockArgs,
    #[arg(long, default_value_t = 6)]
    pub max_total: usize,
    /// Trailing entries examined by the growth test.
    #[arg(long, default_value_t = 3)]
    pub window: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Rank cache file.
    #[arg(long, env = "HOPFMIN_CACHE")]
    pub cache: Option<PathBuf>,
    /// Include block determinants.
    #[arg(long)]
    pub dets: bool,
    /// Factor determinants by cyclotomic polynomials up to this order.
    #[arg(long, value_name = "BOUND", num_args = 0..=1, default_missing_value = "24")]
    pub factors: Option<u32>,
}

#[derive(Debug, Args)]
pub struct DetArgs {
    #[command(flatten)]
    pub datum: DatumArgs,
    #[command(flatten)]
    pub blocks: BlockArgs,
    /// Multidegree, e.g. 1,1.
    #[arg(long)]
    pub deg: String,
    /// Largest cyclotomic order tried when factoring.
    #[arg(long, default_value_t = 24)]
    pub factor_bound: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct Sl2Args {
    /// Highest weight, a rational literal such as 3, -1 or 1/2.
    #[arg(allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// Lower every total-degree bound by one.
    #[arg(long)]
    pub quick: bool,
    /// Corrupt the shuffle-side braiding to check that the suites notice.
    #[arg(long, hide = true)]
    pub mutate_braiding: bool,
}

/// Runs a command and returns what goes to stdout. Warnings go to stderr.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Analyze(a) => analyze(a),
        Command::Det(a) => det(a),
        Command::Sl2(a) => sl2(a),
        Command::Selftest(a) => selftest(a),
    }
}

pub fn load_datum(args: &DatumArgs) -> Result<(String, Datum), CliError> {
    let (label, datum) = match (&args.datum, &args.preset) {
        (Some(path), _) => (path.display().to_string(), read_datum_file(path)?),
        (None, Some(name)) => {
            let preset: Preset = name.parse().map_err(CliError::Input)?;
            (preset.to_string(), preset.build(&parse_base(&args.base)?)?)
        }
        (None, None) => return Err(CliError::Input("give --datum or --preset".into())),
    };
    match args.specialize {
        Some(n) => Ok((format!("{label} at order {n}"), specialize_datum(&datum, n)?)),
        None => Ok((label, datum)),
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(CliError::Input("--jobs must be at least 1".into())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Input(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

pub fn analyze_document(a: &AnalyzeArgs) -> Result<ResultDocument, CliError> {
    let (label, datum) = load_datum(&a.datum)?;
    if a.window == 0 {
        return Err(CliError::Input("--window must be at least 1".into()));
    }
    let factor_bound = a.factors.filter(|_| datum.field() == Field::RationalFunction);
    let options = BlockOptions { max_words: a.blocks.max_words, factor_bound };
    let cache = a.cache.as_ref().map(|p| FileCache::open(p, &datum.content_hash(), datum.field(), factor_bound));
    if let Some(w) = cache.as_ref().and_then(FileCache::warning) {
        eprintln!("warning: {w}");
    }
    let params = GrowthParams::with_window(a.window);
    let report = with_jobs(a.blocks.jobs, || {
        dominance_verdict(&datum, a.max_total, &params, &options, cache.as_ref().map(|c| c as &dyn RankCache))
    })??;
    if let Some(c) = &cache {
        eprintln!("cache: {} hits, {} new blocks", c.hits(), c.stored());
        if c.stored() > 0 {
            if let Err(e) = c.save() {
                eprintln!("warning: could not write cache: {e}");
            }
        }
    }
    Ok(ResultDocument::new(label, &datum, &report, a.dets))
}

fn analyze(a: &AnalyzeArgs) -> Result<String, CliError> {
    let doc = analyze_document(a)?;
    Ok(match a.format {
        Format::Json => doc.to_json(),
        Format::Csv => doc.to_csv(),
        Format::Table => doc.to_table(),
    })
}

fn parse_deg(text: &str, letters: usize) -> Result<MultiDegree, CliError> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let counts = inner
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Input(format!("--deg {text}: expected comma-separated counts")))?;
    if counts.len() != letters {
        return Err(CliError::Input(format!("--deg {text}: datum has {letters} letters, got {} counts", counts.len())));
    }
    Ok(MultiDegree(counts))
}

#[derive(serde::Serialize)]
struct DetReport<'a> {
    source: &'a str,
    hash: String,
    #[serde(flatten)]
    block: BlockEntry,
}

fn det(a: &DetArgs) -> Result<String, CliError> {
    let (label, datum) = load_datum(&a.datum)?;
    let deg = parse_deg(&a.deg, datum.letters())?;
    let factor_bound = (datum.field() == Field::RationalFunction).then_some(a.factor_bound);
    let options = BlockOptions { max_words: a.blocks.max_words, factor_bound };
    let report = with_jobs(a.blocks.jobs, || gram_determinant(datum.braiding_matrix(), &deg, &options))??;
    let block = BlockEntry::from_report(&report, true);
    Ok(match a.format {
        Format::Json | Format::Csv => {
            let mut s = serde_json::to_string_pretty(&DetReport { source: &label, hash: datum.content_hash(), block })
                .expect("report serializes");
            s.push('\n');
            s
        }
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "source  {label}");
            let _ = writeln!(out, "block   {} ({} words, rank {})", deg_text(&block.deg), block.size, block.rank);
            let _ = writeln!(out, "det     {}", block.det.as_deref().unwrap_or("?"));
            if let Some(f) = &block.factors {
                let phis: Vec<String> = f.factors.iter().map(|(d, m)| format!("Phi_{d}^{m}")).collect();
                let _ = writeln!(
                    out,
                    "factors {} * t^{} * {} * ({}) / ({})",
                    f.content,
                    f.t_power,
                    if phis.is_empty() { "1".into() } else { phis.join(" * ") },
                    f.remainder,
                    f.denominator
                );
            }
            out
        }
    })
}

fn sl2(a: &Sl2Args) -> Result<String, CliError> {
    let lambda = match Scalar::parse_in(Field::Rational, &a.lambda) {
        Ok(Scalar::Rational(r)) => r,
        Ok(_) => unreachable!("parsed in the rational field"),
        Err(e) => return Err(CliError::Input(format!("lambda {}: {e}", a.lambda))),
    };
    let rep = parallel_report(&lambda);
    Ok(match a.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rep).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["k", "weight", "verma_dim", "contragredient_dim", "shapovalov_value", "irreducible_dim"])
                .expect("in-memory write");
            for l in &rep.levels {
                w.serialize((l.k, &l.weight, l.verma_dim, l.contragredient_dim, &l.shapovalov_value, l.irreducible_dim))
                    .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "lambda {}: dim L = {}, {}", rep.lambda, rep.dim_l, rep.label);
            let _ = writeln!(out, "{:>3}  {:>8}  {:>5}  {:>5}  {:>14}  {:>3}", "k", "weight", "M", "dual", "<F^k v,F^k v>", "L");
            for l in &rep.levels {
                let _ = writeln!(
                    out,
                    "{:>3}  {:>8}  {:>5}  {:>5}  {:>14}  {:>3}",
                    l.k, l.weight, l.verma_dim, l.contragredient_dim, l.shapovalov_value, l.irreducible_dim
                );
            }
            let _ = writeln!(out);
            for c in &rep.correspondence {
                let _ = writeln!(out, "{:<9} {} {}", c.role, c.classical, c.classical_dims);
                let _ = writeln!(out, "{:<9} <-> {} ({})", "", c.quantum, c.quantum_dims);
            }
            out
        }
    })
}

fn selftest(a: &SelftestArgs) -> Result<String, CliError> {
    let opts = SelftestOptions { quick: a.quick, mutate_braiding: a.mutate_braiding };
    let results = run_selftest(&opts);
    let mut report = String::new();
    for r in &results {
        let _ = writeln!(report, "{r}");
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        Err(CliError::Selftest { report, failed })
    } else {
        Ok(report)
    }
}
