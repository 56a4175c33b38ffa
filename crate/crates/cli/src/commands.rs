use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::{debug, info};
use serde::Serialize;

use knotform::analyzer::{
    analyze_entry, default_corpus, parse_corpus, run_corpus, AnalyzeOptions, AnalyzerError, CorpusEntry,
    CorpusRun, CoverReport,
};
use knotform::knot::{dt_code, knot_from_text, KnotDiagram, KnotError};
use knotform::orbit::{
    branched_double, chain, compare, profile, profile_table, validate_profile, Comparison, OrbitError,
    RevolutionProfile, WeightedAction,
};
use knotform::spaceform::{build, render_report, verify, CheckLedger, SpaceFormCertificate, SpaceFormError, SpaceFormSpec};

use crate::cache::{cache_key, ResultCache};
use crate::config::{OutputFormat, RunConfig};
use crate::output::{json_line, Table};
use crate::{CliError, Exit};

const INPUT_HELP: &str = "Input grammars:
  --pd          bracketed list of 4-tuples of positive integers, e.g. \"[(1,4,2,5),(3,6,4,1),(5,2,6,3)]\"
  --dt          whitespace-separated signed even integers, e.g. \"4 6 2\"
  --braid       \"strands=n\" followed by nonzero integers (±i is the i-th generator), e.g. \"strands=2 1 1 1\"
  --torus       coprime P Q, both at least 2
  --twobridge   odd P and 0 < Q <= P coprime to it
  --montesinos  optional \"e=n\" then fractions b/a, e.g. \"e=-1 1/2 1/3 1/5\"";

#[derive(Debug, Parser)]
#[command(name = "knotform", version, about = "Branched double covers of knots, spherical space forms and circle-action orbit spaces")]
pub struct Cli {
    /// Config file (overrides the KNOTFORM_CONFIG environment variable).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    #[arg(long, global = true)]
    pub coset_cap: Option<usize>,
    #[arg(long, global = true)]
    pub group_cap: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Result cache file.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    /// Ignore the cache for this run.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Add wall-clock milliseconds to reports (disables the cache).
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Knot diagrams and their branched double covers.
    #[command(subcommand)]
    Knot(KnotCommand),
    /// Spherical space-form certificates.
    #[command(subcommand)]
    Spaceform(SpaceformCommand),
    /// Orbit spaces of weighted circle actions on the 3-sphere.
    #[command(subcommand)]
    Orbit(OrbitCommand),
    /// Batch analysis of a knot corpus.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Debug, Subcommand)]
pub enum KnotCommand {
    /// Analyze the branched double cover of one knot.
    #[command(after_help = INPUT_HELP)]
    Analyze {
        #[command(flatten)]
        input: KnotInput,
        /// Name used in the report.
        #[arg(long)]
        name: Option<String>,
    },
    /// Print the PD and DT codes of a generated diagram.
    #[command(after_help = INPUT_HELP)]
    Gen {
        #[command(flatten)]
        input: KnotInput,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct KnotInput {
    #[arg(long)]
    pub pd: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub dt: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub braid: Option<String>,
    #[arg(long, num_args = 2, value_names = ["P", "Q"])]
    pub torus: Option<Vec<i64>>,
    #[arg(long, num_args = 2, value_names = ["P", "Q"])]
    pub twobridge: Option<Vec<i64>>,
    #[arg(long, allow_hyphen_values = true)]
    pub montesinos: Option<String>,
}

impl KnotInput {
    /// `(format, payload)` in corpus notation.
    pub fn as_text(&self) -> (&'static str, String) {
        let pair = |v: &[i64]| format!("{} {}", v[0], v[1]);
        if let Some(s) = &self.pd {
            ("pd", s.clone())
        } else if let Some(s) = &self.dt {
            ("dt", s.clone())
        } else if let Some(s) = &self.braid {
            ("braid", s.clone())
        } else if let Some(v) = &self.torus {
            ("torus", pair(v))
        } else if let Some(v) = &self.twobridge {
            ("twobridge", pair(v))
        } else if let Some(s) = &self.montesinos {
            ("montesinos", s.clone())
        } else {
            unreachable!("clap requires one input")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpaceformCase {
    Cyclic,
    Tetrahedral,
    Icosahedral,
}

#[derive(Debug, Subcommand)]
pub enum SpaceformCommand {
    /// Build one group and run the seven checks.
    Verify {
        #[arg(value_enum)]
        case: SpaceformCase,
        #[arg(long)]
        m: u32,
        /// Second weight of the cyclic case.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        p: i64,
        /// Exponent of the tetrahedral case.
        #[arg(long, default_value_t = 0)]
        k: u32,
    },
    /// Verify every spec of the default sweep.
    Sweep,
}

#[derive(Debug, Subcommand)]
pub enum OrbitCommand {
    /// Profile table `t, f(t)` of the quotient by the (k, l) action.
    Profile {
        k: u32,
        l: u32,
        #[arg(long, default_value_t = 101)]
        points: usize,
        /// Add the profile of the branched double cover.
        #[arg(long)]
        double: bool,
    },
    /// Pointwise comparisons of profiles.
    Compare {
        k: u32,
        l: u32,
        /// f_{1,1} >= f_{k,1} >= f_{k,l} (the default).
        #[arg(long)]
        chain: bool,
        /// f_{1,1} >= 2 f_{k,l}.
        #[arg(long)]
        doubling: bool,
        #[arg(long, default_value_t = 10_000)]
        points: usize,
    },
    /// Check the closed-form profile against orbit distances in the 3-sphere.
    Validate {
        k: u32,
        l: u32,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CorpusCommand {
    /// Analyze every row and print a summary.
    Run {
        /// Corpus file: name<TAB>format<TAB>payload[<TAB>expected] per line.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

/// Effective settings after applying command-line overrides.
fn settings(cli: &Cli) -> Result<RunConfig, CliError> {
    let mut cfg = RunConfig::resolve(cli.config.as_deref())?;
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    if let Some(c) = cli.coset_cap {
        cfg.coset_cap = c;
    }
    if let Some(c) = cli.group_cap {
        cfg.group_cap = c;
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if cli.cache.is_some() {
        cfg.cache = cli.cache.clone();
    }
    if cli.no_cache {
        cfg.cache = None;
    }
    cfg.timings |= cli.timings;
    if let Command::Corpus(CorpusCommand::Run { corpus: Some(p) }) = &cli.command {
        cfg.corpus = Some(p.clone());
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Exit {
    let cfg = match settings(&cli) {
        Ok(c) => c,
        Err(e) => return fail(err, &e.to_string(), e.exit()),
    };
    debug!("effective config: {cfg:?}");
    let result = match &cli.command {
        Command::Knot(KnotCommand::Analyze { input, name }) => knot_analyze(&cfg, input, name.as_deref(), out, err),
        Command::Knot(KnotCommand::Gen { input }) => knot_gen(&cfg, input, out, err),
        Command::Spaceform(SpaceformCommand::Verify { case, m, p, k }) => {
            let spec = match case {
                SpaceformCase::Cyclic => SpaceFormSpec::Cyclic { m: *m, p: *p },
                SpaceformCase::Tetrahedral => SpaceFormSpec::Tetrahedral { m: *m, k: *k },
                SpaceformCase::Icosahedral => SpaceFormSpec::Icosahedral { m: *m },
            };
            spaceform_verify(&cfg, spec, out, err)
        }
        Command::Spaceform(SpaceformCommand::Sweep) => spaceform_sweep(&cfg, out, err),
        Command::Orbit(OrbitCommand::Profile { k, l, points, double }) => {
            orbit_profile(&cfg, *k, *l, *points, *double, out, err)
        }
        Command::Orbit(OrbitCommand::Compare { k, l, chain, doubling, points }) => {
            orbit_compare(&cfg, *k, *l, *chain || !*doubling, *doubling, *points, out, err)
        }
        Command::Orbit(OrbitCommand::Validate { k, l, samples }) => orbit_validate(&cfg, *k, *l, *samples, out, err),
        Command::Corpus(CorpusCommand::Run { .. }) => corpus_run(&cfg, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => fail(err, &e.to_string(), e.exit()),
    }
}

fn fail(err: &mut dyn Write, msg: &str, code: Exit) -> Exit {
    let _ = writeln!(err, "error: {msg}");
    code
}

fn options(cfg: &RunConfig) -> AnalyzeOptions {
    AnalyzeOptions { coset_cap: cfg.coset_cap, group_cap: cfg.group_cap, timings: cfg.timings }
}

fn analyzer_exit(e: &AnalyzerError) -> Exit {
    match e {
        AnalyzerError::Knot(_) | AnalyzerError::Corpus { .. } => Exit::InputError,
        _ => Exit::CheckFailed,
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

fn report_table(reports: &[CoverReport], timings: bool) -> Table {
    let mut headers =
        vec!["name", "det", "h1", "orbifold_order", "cover_order", "classification", "theoremC_consistent"];
    if timings {
        headers.push("ms");
    }
    let mut t = Table::new(headers);
    for r in reports {
        let mut row = vec![
            r.name.clone(),
            r.det.to_string(),
            r.h1.to_string(),
            opt(r.orbifold_order),
            opt(r.cover_order),
            r.classification.to_string(),
            r.theorem_c_consistent.to_string(),
        ];
        if timings {
            row.push(opt(r.ms));
        }
        t.push(row);
    }
    t
}

fn write_reports(cfg: &RunConfig, reports: &[CoverReport], out: &mut dyn Write) -> Result<(), CliError> {
    if cfg.format == OutputFormat::Json {
        for r in reports {
            writeln!(out, "{}", json_line("cover_report", r))?;
        }
        Ok(())
    } else {
        report_table(reports, cfg.timings).write(cfg.format, out)
    }
}

fn diagram(input: &KnotInput) -> Result<KnotDiagram, CliError> {
    let (format, payload) = input.as_text();
    knot_from_text(format, &payload).map_err(|e: KnotError| CliError::Input(e.to_string()))
}

/// Opens the configured cache unless timings make reports unrepeatable.
fn open_cache(cfg: &RunConfig) -> Result<Option<ResultCache>, CliError> {
    match &cfg.cache {
        Some(path) if !cfg.timings => ResultCache::open(path).map(Some),
        _ => Ok(None),
    }
}

fn cached_analysis(
    cache: Option<&ResultCache>,
    entry: &CorpusEntry,
    opts: &AnalyzeOptions,
) -> Result<CoverReport, AnalyzerError> {
    let Some(cache) = cache else {
        return analyze_entry(entry, opts);
    };
    let key = cache_key(&entry.name, &entry.format, &entry.payload, opts.coset_cap, opts.group_cap);
    if let Some(hit) = cache.get(&key) {
        match serde_json::from_str::<CoverReport>(&hit) {
            Ok(r) => {
                debug!("cache hit for {}", entry.name);
                return Ok(r);
            }
            Err(e) => log::warn!("ignoring unreadable cache entry for {}: {e}", entry.name),
        }
    }
    let report = analyze_entry(entry, opts)?;
    cache.insert(key, serde_json::to_string(&report).expect("reports serialize"));
    Ok(report)
}

fn knot_analyze(
    cfg: &RunConfig,
    input: &KnotInput,
    name: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Exit, CliError> {
    let (format, payload) = input.as_text();
    let name = name.map_or_else(|| format!("{format}:{payload}"), str::to_string);
    let entry = CorpusEntry { name, format: format.to_string(), payload, expect: None };
    let cache = open_cache(cfg)?;
    let report = cached_analysis(cache.as_ref(), &entry, &options(cfg));
    let report = match report {
        Ok(r) => r,
        Err(AnalyzerError::Knot(e)) => return Ok(fail(err, &e.to_string(), Exit::InputError)),
        Err(e) => return Ok(fail(err, &e.to_string(), analyzer_exit(&e))),
    };
    if let Some(c) = &cache {
        c.persist()?;
    }
    write_reports(cfg, std::slice::from_ref(&report), out)?;
    if !report.theorem_c_consistent {
        return Ok(fail(err, "report contradicts the branched-cover dichotomy", Exit::Violation));
    }
    Ok(Exit::Success)
}

#[derive(Serialize)]
struct GeneratedDiagram {
    crossings: usize,
    writhe: i64,
    pd: String,
    dt: String,
}

fn knot_gen(cfg: &RunConfig, input: &KnotInput, out: &mut dyn Write, _err: &mut dyn Write) -> Result<Exit, CliError> {
    let k = diagram(input)?;
    let dt: Vec<String> = dt_code(&k).iter().map(|x| x.to_string()).collect();
    let g = GeneratedDiagram { crossings: k.crossing_count(), writhe: k.writhe(), pd: k.to_pd_string(), dt: dt.join(" ") };
    if cfg.format == OutputFormat::Json {
        writeln!(out, "{}", json_line("diagram", &g))?;
    } else {
        let mut t = Table::new(["crossings", "writhe", "pd", "dt"]);
        t.push(vec![g.crossings.to_string(), g.writhe.to_string(), g.pd, g.dt]);
        t.write(cfg.format, out)?;
    }
    Ok(Exit::Success)
}

#[derive(Serialize)]
struct SpaceformRecord<'a> {
    spec: SpaceFormSpec,
    order_spin: usize,
    order_so4: usize,
    order_extended_spin: usize,
    order_extended_so4: usize,
    #[serde(flatten)]
    ledger: &'a CheckLedger,
    all_passed: bool,
}

fn certificate(cfg: &RunConfig, spec: SpaceFormSpec) -> Result<(SpaceFormCertificate, CheckLedger), (Exit, String)> {
    match build(spec, cfg.group_cap) {
        Ok(cert) => {
            let ledger = verify(&cert);
            Ok((cert, ledger))
        }
        Err(e @ SpaceFormError::SpecViolation(_)) => Err((Exit::InputError, format!("{spec}: {e}"))),
        Err(e) => Err((Exit::CheckFailed, format!("{spec}: {e}"))),
    }
}

fn spaceform_record<'a>(cert: &SpaceFormCertificate, ledger: &'a CheckLedger) -> SpaceformRecord<'a> {
    SpaceformRecord {
        spec: cert.spec,
        order_spin: cert.pi_hat.order(),
        order_so4: cert.pi.order(),
        order_extended_spin: cert.gamma_hat.order(),
        order_extended_so4: cert.gamma.order(),
        ledger,
        all_passed: ledger.all_passed(),
    }
}

fn spaceform_verify(
    cfg: &RunConfig,
    spec: SpaceFormSpec,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Exit, CliError> {
    let (cert, ledger) = match certificate(cfg, spec) {
        Ok(x) => x,
        Err((code, msg)) => return Ok(fail(err, &msg, code)),
    };
    match cfg.format {
        OutputFormat::Json => writeln!(out, "{}", json_line("spaceform", &spaceform_record(&cert, &ledger)))?,
        OutputFormat::Table => out.write_all(render_report(&cert, &ledger).as_bytes())?,
        OutputFormat::Csv => {
            let mut t = Table::new(["check", "passed", "witness"]);
            for c in &ledger.checks {
                t.push(vec![c.name.to_string(), c.passed.to_string(), c.witness.clone().unwrap_or_default()]);
            }
            t.write(cfg.format, out)?;
        }
    }
    if ledger.all_passed() {
        Ok(Exit::Success)
    } else {
        let failed: Vec<&str> = ledger.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
        Ok(fail(err, &format!("{spec}: failed {}", failed.join(", ")), Exit::CheckFailed))
    }
}

fn spaceform_sweep(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<Exit, CliError> {
    let mut t = Table::new(["spec", "order_spin", "order_so4", "abelianization", "all_passed", "failed"]);
    let mut worst = Exit::Success;
    for spec in SpaceFormSpec::default_sweep() {
        let (cert, ledger) = match certificate(cfg, spec) {
            Ok(x) => x,
            Err((code, msg)) => {
                let _ = writeln!(err, "error: {msg}");
                worst = worst.max_code(code);
                continue;
            }
        };
        info!("{spec}: all checks passed = {}", ledger.all_passed());
        if !ledger.all_passed() {
            worst = worst.max_code(Exit::CheckFailed);
        }
        if cfg.format == OutputFormat::Json {
            writeln!(out, "{}", json_line("spaceform", &spaceform_record(&cert, &ledger)))?;
        } else {
            let failed: Vec<&str> = ledger.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
            t.push(vec![
                spec.to_string(),
                cert.pi_hat.order().to_string(),
                cert.pi.order().to_string(),
                ledger.abelianization.to_string(),
                ledger.all_passed().to_string(),
                failed.join(" "),
            ]);
        }
    }
    if cfg.format != OutputFormat::Json {
        t.write(cfg.format, out)?;
    }
    Ok(worst)
}

impl Exit {
    fn max_code(self, other: Exit) -> Exit {
        if (other as u8) > (self as u8) {
            other
        } else {
            self
        }
    }
}

fn action(k: u32, l: u32) -> Result<WeightedAction, CliError> {
    WeightedAction::new(k, l).map_err(|e| CliError::Input(e.to_string()))
}

#[derive(Serialize)]
struct ProfileRow {
    t: f64,
    values: Vec<f64>,
}

fn orbit_profile(
    cfg: &RunConfig,
    k: u32,
    l: u32,
    points: usize,
    double: bool,
    out: &mut dyn Write,
    _err: &mut dyn Write,
) -> Result<Exit, CliError> {
    let a = action(k, l)?;
    if points < 2 {
        return Err(CliError::Input("need at least two points".into()));
    }
    let mut profiles: Vec<RevolutionProfile> = vec![profile(a)];
    if double {
        profiles.push(branched_double(&profiles[0]));
    }
    let rows = profile_table(&profiles, points);
    if cfg.format == OutputFormat::Json {
        let labels: Vec<String> = profiles.iter().map(|p| p.label()).collect();
        for r in rows {
            #[derive(Serialize)]
            struct Row<'a> {
                profiles: &'a [String],
                #[serde(flatten)]
                row: ProfileRow,
            }
            let row = Row { profiles: &labels, row: ProfileRow { t: r[0], values: r[1..].to_vec() } };
            writeln!(out, "{}", json_line("profile_row", &row))?;
        }
    } else {
        // profile tables are always CSV
        let mut t = Table::new(std::iter::once("t".to_string()).chain(profiles.iter().map(|p| p.label())));
        for r in rows {
            t.push(r.iter().map(|v| v.to_string()).collect());
        }
        t.write(OutputFormat::Csv, out)?;
    }
    Ok(Exit::Success)
}

#[derive(Serialize)]
struct ComparisonRecord {
    claim: String,
    #[serde(flatten)]
    result: Comparison,
}

#[allow(clippy::too_many_arguments)]
fn orbit_compare(
    cfg: &RunConfig,
    k: u32,
    l: u32,
    with_chain: bool,
    doubling: bool,
    points: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Exit, CliError> {
    let a = action(k, l)?;
    let tol = cfg.tolerances.grid;
    let bad = |e: OrbitError| CliError::Input(e.to_string());
    let mut records = Vec::new();
    if with_chain {
        let [upper, lower] = chain(a, points, tol).map_err(bad)?;
        records.push(ComparisonRecord { claim: format!("S_1,1 >= S_{k},1"), result: upper });
        records.push(ComparisonRecord { claim: format!("S_{k},1 >= S_{k},{l}"), result: lower });
    }
    if doubling {
        let round = profile(WeightedAction::hopf());
        let c = compare(&round, &branched_double(&profile(a)), points, tol).map_err(bad)?;
        records.push(ComparisonRecord { claim: format!("S_1,1 >= 2*S_{k},{l}"), result: c });
    }
    if cfg.format == OutputFormat::Json {
        for r in &records {
            writeln!(out, "{}", json_line("comparison", r))?;
        }
    } else {
        let mut t = Table::new(["claim", "holds", "max_violation", "witness_t"]);
        for r in &records {
            t.push(vec![
                r.claim.clone(),
                r.result.holds.to_string(),
                format!("{:e}", r.result.max_violation),
                r.result.witness_t.to_string(),
            ]);
        }
        t.write(cfg.format, out)?;
    }
    if records.iter().all(|r| r.result.holds) {
        Ok(Exit::Success)
    } else {
        Ok(fail(err, "comparison failed", Exit::CheckFailed))
    }
}

#[derive(Serialize)]
struct ValidationRecord {
    action: String,
    samples: usize,
    seed: u64,
    max_discrepancy: Option<f64>,
    gate: f64,
    accepted: bool,
}

fn orbit_validate(
    cfg: &RunConfig,
    k: u32,
    l: u32,
    samples: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Exit, CliError> {
    let a = action(k, l)?;
    let gate = cfg.tolerances.oracle_gate;
    let (max, code) = match validate_profile(a, samples, cfg.seed, gate) {
        Ok(v) => (v.max_discrepancy, Exit::Success),
        Err(OrbitError::OracleMismatch { max, .. }) => (max, Exit::CheckFailed),
        Err(e) => return Err(CliError::Input(e.to_string())),
    };
    let record = ValidationRecord {
        action: a.to_string(),
        samples,
        seed: cfg.seed,
        max_discrepancy: Some(max),
        gate,
        accepted: code == Exit::Success,
    };
    if cfg.format == OutputFormat::Json {
        writeln!(out, "{}", json_line("validation", &record))?;
    } else {
        let mut t = Table::new(["action", "samples", "seed", "max_discrepancy", "gate", "accepted"]);
        t.push(vec![
            record.action.clone(),
            samples.to_string(),
            cfg.seed.to_string(),
            format!("{max:e}"),
            format!("{gate:e}"),
            record.accepted.to_string(),
        ]);
        t.write(cfg.format, out)?;
    }
    if code != Exit::Success {
        return Ok(fail(err, &format!("profile of {a} rejected: max discrepancy {max:e} >= {gate:e}"), code));
    }
    Ok(code)
}

fn load_corpus(cfg: &RunConfig) -> Result<Vec<CorpusEntry>, CliError> {
    match &cfg.corpus {
        None => Ok(default_corpus()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read corpus {}: {e}", path.display())))?;
            parse_corpus(&text).map_err(|e| CliError::Input(e.to_string()))
        }
    }
}

fn corpus_run(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<Exit, CliError> {
    let entries = load_corpus(cfg)?;
    let cache = open_cache(cfg)?;
    let opts = options(cfg);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| CliError::Config(format!("thread pool: {e}")))?;
    let run: CorpusRun = pool.install(|| run_corpus(&entries, |e| cached_analysis(cache.as_ref(), e, &opts)));
    if let Some(c) = &cache {
        c.persist()?;
    }
    write_reports(cfg, &run.reports, out)?;
    let s = &run.summary;
    match cfg.format {
        OutputFormat::Json => {
            for e in &run.errors {
                writeln!(out, "{}", json_line("row_error", e))?;
            }
            #[derive(Serialize)]
            struct Summary<'a> {
                #[serde(flatten)]
                counts: &'a knotform::analyzer::CorpusSummary,
                violations: usize,
            }
            writeln!(out, "{}", json_line("summary", &Summary { counts: s, violations: s.violations() }))?;
        }
        OutputFormat::Table => {
            for e in &run.errors {
                writeln!(out, "error {}: {}", e.name, e.error)?;
            }
            writeln!(out, "rows: {}  errors: {}", s.rows, s.errors)?;
            writeln!(out, "violations: {}", s.violations())?;
        }
        OutputFormat::Csv => {
            // keep stdout a single CSV document
            for e in &run.errors {
                writeln!(err, "error {}: {}", e.name, e.error)?;
            }
            writeln!(err, "rows: {}  errors: {}", s.rows, s.errors)?;
            writeln!(err, "violations: {}", s.violations())?;
        }
    }
    if s.theorem_c_violations > 0 || s.order_two_covers > 0 {
        Ok(Exit::Violation)
    } else if s.errors > 0 {
        Ok(Exit::RowErrors)
    } else if s.violations() > 0 {
        Ok(Exit::CheckFailed)
    } else {
        Ok(Exit::Success)
    }
}
