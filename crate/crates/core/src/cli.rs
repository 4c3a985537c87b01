//! The `negacyclic` command line.
//!
//! [`run`] takes the argument list and an output sink and returns the process
//! exit status, so the binary stays a one-liner and tests can drive every
//! subcommand in process.

use std::fs::{self, OpenOptions};
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::code::{
    audit_spec, classify, construct_code, default_alpha, search, table_rows, AlphaPolicy, Check,
    CodeReport, CodeSpec, SearchConfig, Skipped, SpecFile, TableRow,
};
use crate::error::Error;
use crate::factor::{admissible_lengths, factor_xn_plus_one, is_admissible_t};
use crate::field::{ExtField, PrimeModulus};
use crate::golden::{diff, golden_rows_for, GoldenDiff};
use crate::oracle::{
    dual_ideal_checks, structural_checks, true_min_distance, DistanceReport, DEFAULT_BUDGET,
};
use crate::poly::Poly;
use crate::weyl::{simulate, SimulationReport, DEFAULT_CAP};

/// Environment variable overriding the cache directory.
pub const CACHE_ENV: &str = "NEGACYCLIC_CACHE_DIR";
const DEFAULT_CACHE_DIR: &str = ".negacyclic-cache";
const CACHE_FILE: &str = "search.jsonl";
const CACHE_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
/// I/O trouble or an internal invariant failure.
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_GOLDEN: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "negacyclic",
    version,
    about = "Construct, classify and verify t-Frobenius negacyclic quantum stabilizer codes over F_p"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Markdown,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlphaArg {
    /// -c_0^{-1} for k = 2, else 1
    Default,
    /// every nonzero residue
    Sweep,
}

impl From<AlphaArg> for AlphaPolicy {
    fn from(a: AlphaArg) -> AlphaPolicy {
        match a {
            AlphaArg::Default => AlphaPolicy::Default,
            AlphaArg::Sweep => AlphaPolicy::Sweep,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct CacheArgs {
    /// Cache directory [default: $NEGACYCLIC_CACHE_DIR, else ./.negacyclic-cache]
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    /// Neither read nor append the cache
    #[arg(long)]
    pub no_cache: bool,
}

#[derive(Args, Debug, Clone)]
pub struct SearchArgs {
    #[arg(long)]
    pub p: u64,
    /// Largest length considered [default for `tables`: the largest reference length]
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Largest t considered [default: the least admissible t of each length]
    #[arg(long)]
    pub t_cap: Option<u64>,
    /// Field degrees k, comma separated [default: every divisor > 1 of an admissible t]
    #[arg(long, value_delimiter = ',')]
    pub k: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = AlphaArg::Default)]
    pub alpha_policy: AlphaArg,
    /// Also try k = 1, where the construction degenerates
    #[arg(long)]
    pub allow_k1: bool,
    #[command(flatten)]
    pub cache: CacheArgs,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Factor X^n+1 over F_{p^k}, with cyclotomic coset labels
    Factor {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Build a code from explicit g and h and report its parameters
    Construct {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// t = k*m [default: least m making k*m admissible]
        #[arg(long)]
        m: Option<u64>,
        /// Generator over F_p, e.g. "X^2+1"
        #[arg(long)]
        g: String,
        /// Factor over F_{p^k} in the variable X with generator e, e.g. "X^4+(2e+1)X^2+1"
        #[arg(long)]
        h: String,
        /// Nonzero alpha in F_p [default: -c_0^{-1} for k = 2, else 1]
        #[arg(long)]
        alpha: Option<u64>,
        /// Write the spec file (TOML) here
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Enumerate every admissible code within bounds and tabulate parameters
    Search {
        #[command(flatten)]
        args: SearchArgs,
        /// List every spec rather than the deduplicated table (not cached)
        #[arg(long)]
        specs: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Search and diff the table against the shipped reference rows
    Tables {
        #[command(flatten)]
        args: SearchArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the exhaustive symplectic oracle against a spec file
    Verify {
        spec: PathBuf,
        /// Largest number of elements any enumeration may visit
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Samples for the dual-ideal check
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Skip re-validation, to inspect specs that fail it
        #[arg(long)]
        unchecked: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Build the stabilizer projector densely and check it
    Simulate {
        spec: PathBuf,
        /// Largest allowed state space dimension p^n
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Skip re-validation, to inspect specs that fail it
        #[arg(long)]
        unchecked: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Failure of a subcommand, carrying its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::BudgetExceeded { .. } | Error::CapExceeded { .. } => EXIT_BUDGET,
            Error::Invariant(_) => EXIT_ERROR,
            _ => EXIT_VALIDATION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure {
            code: EXIT_ERROR,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Parse `args` (program name first), run, and return the exit status.
/// Diagnostics go to stderr.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_VALIDATION
            } else {
                EXIT_OK
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CliResult<i32> {
    match cmd {
        Command::Factor { p, k, n, format } => cmd_factor(p, k, n, format, out),
        Command::Construct {
            p,
            n,
            k,
            m,
            g,
            h,
            alpha,
            out: path,
            format,
        } => cmd_construct(p, n, k, m, &g, &h, alpha, path.as_deref(), format, out),
        Command::Search {
            args,
            specs,
            format,
        } => cmd_search(&args, specs, format, out),
        Command::Tables { args, format } => cmd_tables(&args, format, out),
        Command::Verify {
            spec,
            budget,
            samples,
            seed,
            unchecked,
            format,
        } => cmd_verify(&spec, budget, samples, seed, unchecked, format, out),
        Command::Simulate {
            spec,
            cap,
            seed,
            unchecked,
            format,
        } => cmd_simulate(&spec, cap, seed, unchecked, format, out),
    }
}

/// A rectangular text table rendered as CSV or Markdown.
struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(headers: Vec<&'static str>) -> Table {
        Table {
            headers,
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn csv(&self, out: &mut dyn Write) -> CliResult<()> {
        let mut w = csv::Writer::from_writer(out);
        let fail = |e: csv::Error| Failure {
            code: EXIT_ERROR,
            message: e.to_string(),
        };
        w.write_record(&self.headers).map_err(fail)?;
        for r in &self.rows {
            w.write_record(r).map_err(fail)?;
        }
        w.flush()?;
        Ok(())
    }

    fn markdown(&self, out: &mut dyn Write) -> CliResult<()> {
        let cell = |s: &str| s.replace('|', "\\|");
        writeln!(out, "| {} |", self.headers.join(" | "))?;
        writeln!(out, "|{}|", vec!["---"; self.headers.len()].join("|"))?;
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|c| cell(c)).collect();
            writeln!(out, "| {} |", cells.join(" | "))?;
        }
        Ok(())
    }

    /// CSV or Markdown; JSON output is produced from the typed data instead.
    fn render(&self, format: Format, out: &mut dyn Write) -> CliResult<()> {
        match format {
            Format::Csv => self.csv(out),
            _ => self.markdown(out),
        }
    }
}

fn json(value: &impl Serialize, out: &mut dyn Write) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure {
        code: EXIT_ERROR,
        message: e.to_string(),
    })?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn ledger_table(checks: &[Check]) -> Table {
    let mut t = Table::new(vec!["check", "result", "detail"]);
    for c in checks {
        t.push(vec![
            c.name.clone(),
            if c.passed { "pass" } else { "FAIL" }.to_string(),
            c.detail.clone().unwrap_or_default(),
        ]);
    }
    t
}

#[derive(Serialize)]
struct FactorRow {
    poly: String,
    degree: usize,
    coset: String,
}

fn cmd_factor(p: u64, k: usize, n: u64, format: Format, out: &mut dyn Write) -> CliResult<i32> {
    let pm = PrimeModulus::new(p)?;
    let fs = factor_xn_plus_one(pm, k, n)?;
    let rows: Vec<FactorRow> = fs
        .factors()
        .iter()
        .map(|f| FactorRow {
            poly: f.poly.to_string(),
            degree: f.poly.degree_or_zero(),
            coset: f.coset.to_string(),
        })
        .collect();
    if format == Format::Json {
        #[derive(Serialize)]
        struct FactorOut<'a> {
            p: u64,
            k: usize,
            n: u64,
            modulus: String,
            factors: &'a [FactorRow],
        }
        let modulus = fs.field().defining_polynomial().to_string();
        json(
            &FactorOut {
                p,
                k,
                n,
                modulus,
                factors: &rows,
            },
            out,
        )?;
    } else {
        if format == Format::Markdown {
            writeln!(
                out,
                "X^{n}+1 over F_{}^{k}, e a root of {}\n",
                p,
                fs.field().defining_polynomial()
            )?;
        }
        let mut t = Table::new(vec!["factor", "degree", "coset"]);
        for r in &rows {
            t.push(vec![r.poly.clone(), r.degree.to_string(), r.coset.clone()]);
        }
        t.render(format, out)?;
    }
    Ok(EXIT_OK)
}

/// Least `m` with `k*m` admissible for length `n`.
pub fn default_m(p: PrimeModulus, n: usize, k: usize) -> crate::Result<u64> {
    let t_min = admissible_lengths(p, n as u64)?
        .ok_or_else(|| Error::Violation(crate::code::condition::LENGTH.to_string()))?;
    // admissible t are odd multiples of t_min; k*m hits one within 2k steps or never
    (1..=2 * k as u64)
        .find(|&m| is_admissible_t(t_min, k as u64 * m))
        .ok_or_else(|| Error::Violation(crate::code::condition::LENGTH.to_string()))
}

fn report_table(reports: &[&CodeReport]) -> Table {
    let mut t = Table::new(vec![
        "n", "k_dim", "d", "linear", "k", "alpha", "g", "h", "a",
    ]);
    for r in reports {
        t.push(vec![
            r.n.to_string(),
            r.k_dim.to_string(),
            r.d_bch.to_string(),
            r.linear.to_string(),
            r.spec.k().to_string(),
            r.spec.alpha().to_string(),
            r.spec.g().to_string(),
            r.spec.h().to_string(),
            r.spec.a().to_string(),
        ]);
    }
    t
}

#[allow(clippy::too_many_arguments)]
fn cmd_construct(
    p: u64,
    n: usize,
    k: usize,
    m: Option<u64>,
    g: &str,
    h: &str,
    alpha: Option<u64>,
    path: Option<&Path>,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let pm = PrimeModulus::new(p)?;
    let fp = ExtField::prime(pm);
    let fk = ExtField::new(pm, k)?;
    let g = Poly::parse(&fp, g)?;
    let h = Poly::parse(&fk, h)?;
    let m = match m {
        Some(m) => m,
        None => default_m(pm, n, k)?,
    };
    let alpha = match alpha {
        Some(a) => (a % p) as u32,
        None => default_alpha(pm, k)?,
    };
    let spec = construct_code(pm, n, k, m, &g, &h, alpha)?;
    let report = classify(&spec)?;
    if let Some(path) = path {
        write_spec(&spec, path)?;
    }
    emit_report(&report, format, out)?;
    Ok(EXIT_OK)
}

fn emit_report(report: &CodeReport, format: Format, out: &mut dyn Write) -> CliResult<()> {
    match format {
        Format::Json => json(report, out),
        Format::Csv => report_table(&[report]).csv(out),
        Format::Markdown => {
            writeln!(
                out,
                "[[{},{},{}]]_{}{}\n",
                report.n,
                report.k_dim,
                report.d_bch,
                report.p,
                if report.linear { "" } else { " *" }
            )?;
            report_table(&[report]).markdown(out)?;
            writeln!(out)?;
            ledger_table(&report.verification).markdown(out)
        }
    }
}

/// Serialize a spec as TOML.
pub fn write_spec(spec: &CodeSpec, path: &Path) -> CliResult<()> {
    let text = toml::to_string(&spec.to_file()).map_err(|e| Failure {
        code: EXIT_ERROR,
        message: e.to_string(),
    })?;
    fs::write(path, text)?;
    Ok(())
}

/// Read a TOML spec file, re-validating unless `unchecked`.
pub fn read_spec(path: &Path, unchecked: bool) -> CliResult<CodeSpec> {
    let text = fs::read_to_string(path)?;
    let file: SpecFile =
        toml::from_str(&text).map_err(|e| Failure::from(Error::Parse(e.to_string())))?;
    let spec = if unchecked {
        file.to_unchecked()?
    } else {
        file.to_spec()?
    };
    Ok(spec)
}

/// What the search and tables commands persist.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub p: u64,
    pub spec_count: usize,
    pub rows: Vec<TableRow>,
    pub skipped: Vec<Skipped>,
}

#[derive(Serialize, Deserialize)]
struct CacheRecord {
    key: String,
    config: SearchConfig,
    summary: SearchSummary,
}

fn cache_dir(args: &CacheArgs) -> PathBuf {
    args.cache_dir
        .clone()
        .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR))
}

/// SHA-256 of the canonical JSON of the config and cache version.
pub fn config_key(cfg: &SearchConfig) -> String {
    let canonical = serde_json::to_string(&(CACHE_VERSION, env!("CARGO_PKG_VERSION"), cfg))
        .expect("config serializes");
    format!("{:x}", Sha256::digest(canonical.as_bytes()))
}

fn cache_lookup(path: &Path, key: &str) -> Option<SearchSummary> {
    let file = fs::File::open(path).ok()?;
    // a torn trailing line from an interrupted append is skipped
    io::BufReader::new(file)
        .lines()
        .map_while(|l| l.ok())
        .filter_map(|l| serde_json::from_str::<CacheRecord>(&l).ok())
        .find(|r| r.key == key)
        .map(|r| r.summary)
}

fn cache_append(dir: &Path, record: &CacheRecord) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut line = serde_json::to_string(record).map_err(io::Error::other)?;
    line.push('\n');
    let mut f = OpenOptions::new()
        .create(true)
        .append(true)
        .open(dir.join(CACHE_FILE))?;
    // one write per record keeps appends atomic on O_APPEND files
    f.write_all(line.as_bytes())
}

fn search_config(args: &SearchArgs, n_max: usize) -> SearchConfig {
    SearchConfig {
        p: args.p,
        n_max,
        t_cap: args.t_cap,
        k_set: args.k.clone(),
        alpha_policy: args.alpha_policy.into(),
        allow_k1: args.allow_k1,
    }
}

/// Run a search through the cache.
pub fn cached_search(cfg: &SearchConfig, cache: &CacheArgs) -> crate::Result<SearchSummary> {
    let key = config_key(cfg);
    let dir = cache_dir(cache);
    if !cache.no_cache {
        if let Some(s) = cache_lookup(&dir.join(CACHE_FILE), &key) {
            eprintln!("cache hit {}", &key[..12]);
            return Ok(s);
        }
    }
    let outcome = search(cfg)?;
    let summary = SearchSummary {
        p: cfg.p,
        spec_count: outcome.reports.len(),
        rows: table_rows(&outcome.reports),
        skipped: outcome.skipped,
    };
    if !cache.no_cache {
        let record = CacheRecord {
            key,
            config: cfg.clone(),
            summary: summary.clone(),
        };
        if let Err(e) = cache_append(&dir, &record) {
            eprintln!("warning: cache append failed: {e}");
        }
    }
    Ok(summary)
}

fn row_cells(r: &TableRow) -> Vec<String> {
    vec![
        r.n.to_string(),
        r.k_dim.to_string(),
        r.d.to_string(),
        r.linear.to_string(),
        format!(
            "[[{},{},{}]]_{}{}",
            r.n,
            r.k_dim,
            r.d,
            r.p,
            if r.linear { "" } else { " *" }
        ),
    ]
}

fn emit_skipped(skipped: &[Skipped], out: &mut dyn Write) -> CliResult<()> {
    if skipped.is_empty() {
        return Ok(());
    }
    writeln!(out, "\nskipped:\n")?;
    let mut t = Table::new(vec!["n", "k", "reason"]);
    for s in skipped {
        t.push(vec![s.n.to_string(), s.k.to_string(), s.reason.clone()]);
    }
    t.markdown(out)
}

fn cmd_search(
    args: &SearchArgs,
    specs: bool,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let n_max = args.n_max.ok_or_else(|| Failure {
        code: EXIT_VALIDATION,
        message: "search needs --n-max".into(),
    })?;
    let cfg = search_config(args, n_max);
    if specs {
        let outcome = search(&cfg)?;
        let reports: Vec<&CodeReport> = outcome.reports.iter().collect();
        match format {
            Format::Json => json(&outcome, out)?,
            _ => report_table(&reports).render(format, out)?,
        }
        return Ok(EXIT_OK);
    }
    let summary = cached_search(&cfg, &args.cache)?;
    match format {
        Format::Json => json(&summary, out)?,
        _ => {
            let mut t = Table::new(vec!["n", "k_dim", "d", "linear", "code"]);
            for r in &summary.rows {
                t.push(row_cells(r));
            }
            t.render(format, out)?;
            if format == Format::Markdown {
                writeln!(out, "\n{} specs", summary.spec_count)?;
                emit_skipped(&summary.skipped, out)?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct TablesOut<'a> {
    p: u64,
    n_max: usize,
    spec_count: usize,
    complete: bool,
    diff: &'a GoldenDiff,
    skipped: &'a [Skipped],
}

fn cmd_tables(args: &SearchArgs, format: Format, out: &mut dyn Write) -> CliResult<i32> {
    let golden = golden_rows_for(PrimeModulus::new(args.p)?.get());
    if golden.is_empty() {
        return Err(Failure {
            code: EXIT_VALIDATION,
            message: format!("no reference rows for p = {}", args.p),
        });
    }
    let n_max = args
        .n_max
        .unwrap_or_else(|| golden.iter().map(|g| g.row.n).max().unwrap_or(0));
    let summary = cached_search(&search_config(args, n_max), &args.cache)?;
    let d = diff(&summary.rows, &golden);
    match format {
        Format::Json => json(
            &TablesOut {
                p: args.p,
                n_max,
                spec_count: summary.spec_count,
                complete: d.is_complete(),
                diff: &d,
                skipped: &summary.skipped,
            },
            out,
        )?,
        _ => {
            let mut t = Table::new(vec!["n", "k_dim", "d", "linear", "code", "status", "note"]);
            let mut all: Vec<(TableRow, &str, String)> = Vec::new();
            for g in &d.matched {
                all.push((g.row, "matched", g.annotation.clone().unwrap_or_default()));
            }
            for g in &d.missing {
                all.push((g.row, "MISSING", g.annotation.clone().unwrap_or_default()));
            }
            all.sort_by_key(|(r, _, _)| *r);
            for (r, status, note) in all {
                let mut cells = row_cells(&r);
                cells.push(status.to_string());
                cells.push(note);
                t.push(cells);
            }
            t.render(format, out)?;
            if format == Format::Markdown {
                writeln!(
                    out,
                    "\n{} of {} reference rows matched; {} further rows found",
                    d.matched.len(),
                    d.matched.len() + d.missing.len(),
                    d.extra.len()
                )?;
                emit_skipped(&summary.skipped, out)?;
            }
        }
    }
    Ok(if d.is_complete() {
        EXIT_OK
    } else {
        EXIT_GOLDEN
    })
}

/// Full oracle ledger for one spec.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub spec: SpecFile,
    pub distance: DistanceReport,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Validation ledger, structural checks, exhaustive distance, and for linear
/// `k = 2` codes the dual-ideal sampling.
pub fn verify_spec(
    spec: &CodeSpec,
    budget: u64,
    samples: usize,
    seed: u64,
) -> crate::Result<VerifyReport> {
    let mut checks = audit_spec(spec)?;
    checks.extend(structural_checks(spec)?);
    let distance = true_min_distance(spec, budget)?;
    let p = spec.p().get() as u128;
    let n = spec.n() as u32;
    checks.push(Check::with_detail(
        "|S| * |S^perp| = p^(2n)",
        distance.s_size as u128 * distance.dual_size as u128 == p.pow(2 * n),
        format!("{} * {}", distance.s_size, distance.dual_size),
    ));
    checks.push(Check::with_detail(
        "min joint weight of S^perp \\ S >= BCH distance",
        distance.bound_holds(),
        match distance.true_distance {
            Some(d) => format!("{d} vs {}", distance.d_bch),
            None => "S^perp = S".to_string(),
        },
    ));
    if spec.k() == 2 {
        let linear = classify(spec).map(|r| r.linear).unwrap_or(false);
        if linear {
            checks.extend(dual_ideal_checks(spec, samples, seed)?);
        }
    }
    Ok(VerifyReport {
        spec: spec.to_file(),
        distance,
        checks,
    })
}

fn cmd_verify(
    path: &Path,
    budget: u64,
    samples: usize,
    seed: u64,
    unchecked: bool,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let spec = read_spec(path, unchecked)?;
    let report = verify_spec(&spec, budget, samples, seed)?;
    match format {
        Format::Json => json(&report, out)?,
        _ => {
            if format == Format::Markdown {
                let d = report
                    .distance
                    .true_distance
                    .map_or("none".to_string(), |d| d.to_string());
                writeln!(
                    out,
                    "|S| = {}, |S^perp| = {}, true distance {d}, BCH distance {}\n",
                    report.distance.s_size, report.distance.dual_size, report.distance.d_bch
                )?;
            }
            ledger_table(&report.checks).render(format, out)?;
        }
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VALIDATION
    })
}

fn cmd_simulate(
    path: &Path,
    cap: u64,
    seed: u64,
    unchecked: bool,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let spec = read_spec(path, unchecked)?;
    let report: SimulationReport = simulate(&spec, cap, seed)?;
    match format {
        Format::Json => json(&report, out)?,
        _ => {
            if format == Format::Markdown {
                writeln!(
                    out,
                    "dim {}, |S| = {}, trace(P) = {:.9}\n",
                    report.dim, report.s_size, report.trace_re
                )?;
            }
            ledger_table(&report.checks).render(format, out)?;
        }
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VALIDATION
    })
}
