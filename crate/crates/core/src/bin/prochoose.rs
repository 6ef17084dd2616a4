use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use prochoose::bench::{self, BenchReport};
use prochoose::choose::{self, ChoiceMode, DecideOptions, Status};
use prochoose::io::{self, Decision, Family, Report, ReportDocument};
use prochoose::suite::{self, SuiteConfig};
use prochoose::{Graph, Strategy};

const EXIT_OK: u8 = 0;
const EXIT_REFUTED: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "prochoose", version, about = "Exhaustive proportional / equitable / list choosability checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide k-choosability of one graph
    Decide(DecideArgs),
    /// Bound or compute the proportional choice number
    ChiPc(ChiPcArgs),
    /// Re-derive the catalogue of known results
    Suite(SuiteArgs),
    /// Print a family member in the text graph format
    Gen(GenArgs),
    /// Independently re-check a certificate file
    CertVerify(CertVerifyArgs),
    /// Compare enumeration strategies and pruning on one instance
    Bench(BenchArgs),
}

#[derive(Args)]
struct GraphSource {
    /// Graph file in the "n m" / "u v" text format
    #[arg(long, conflicts_with_all = ["graph6", "family"])]
    graph: Option<PathBuf>,
    /// Graph as a graph6 string
    #[arg(long, conflicts_with = "family")]
    graph6: Option<String>,
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    /// Size parameter of the family (path/cycle/complete: vertices; star: leaves; kmm: m; wang-lih: k)
    #[arg(long)]
    n: Option<usize>,
    /// Component orders for --family linear-forest, e.g. 5,2,1
    #[arg(long, value_delimiter = ',')]
    orders: Vec<usize>,
}

impl GraphSource {
    fn load(&self) -> Result<(String, Graph)> {
        if let Some(path) = &self.graph {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let g = io::parse_graph(&text).with_context(|| format!("parsing {}", path.display()))?;
            return Ok((path.display().to_string(), g));
        }
        if let Some(s) = &self.graph6 {
            return Ok((s.clone(), io::parse_graph6(s)?));
        }
        let family = self.family.ok_or_else(|| anyhow!("one of --graph, --graph6 or --family is required"))?;
        Ok(io::build_family(family.into(), self.n, &self.orders)?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Path,
    Cycle,
    Star,
    Complete,
    Kmm,
    WangLih,
    LinearForest,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Path => Family::Path,
            FamilyArg::Cycle => Family::Cycle,
            FamilyArg::Star => Family::Star,
            FamilyArg::Complete => Family::Complete,
            FamilyArg::Kmm => Family::Kmm,
            FamilyArg::WangLih => Family::WangLih,
            FamilyArg::LinearForest => Family::LinearForest,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    List,
    EquitableList,
    Proportional,
}

impl From<ModeArg> for ChoiceMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::List => ChoiceMode::List,
            ModeArg::EquitableList => ChoiceMode::EquitableList,
            ModeArg::Proportional => ChoiceMode::Proportional,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    RestrictedGrowth,
    CanonicalFilter,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::RestrictedGrowth => Strategy::RestrictedGrowth,
            StrategyArg::CanonicalFilter => Strategy::CanonicalFilter,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PruningArg {
    On,
    Off,
    Both,
}

#[derive(Args)]
struct SearchArgs {
    /// Stop after scanning this many assignments (verdict becomes unknown)
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Emit one JSON document on stdout
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DecideArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value = "proportional")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "canonical-filter")]
    strategy: StrategyArg,
    /// Write the refutation certificate here when one is produced
    #[arg(long)]
    cert_out: Option<PathBuf>,
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Args)]
struct ChiPcArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Largest k to try (default |V| - 1, or |V| for complete graphs)
    #[arg(long)]
    k_max: Option<usize>,
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Args)]
struct SuiteArgs {
    /// Largest total order in the linear-forest sweep
    #[arg(long, default_value_t = 7)]
    nmax: usize,
    /// Also run the 12-vertex three-star case (slow)
    #[arg(long)]
    long: bool,
    /// Record per-claim wall time (makes output run-dependent)
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFormat {
    Text,
    Graph6,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, value_enum, default_value = "text")]
    format: GenFormat,
}

#[derive(Args)]
struct CertVerifyArgs {
    file: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value = "proportional")]
    mode: ModeArg,
    /// Only this strategy (default: both)
    #[arg(long, value_enum)]
    strategy: Option<StrategyArg>,
    #[arg(long, value_enum, default_value = "both")]
    pruning: PruningArg,
    #[command(flatten)]
    search: SearchArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Decide(a) => run_decide(a),
        Command::ChiPc(a) => run_chi_pc(a),
        Command::Suite(a) => run_suite(a),
        Command::Gen(a) => run_gen(a),
        Command::CertVerify(a) => run_cert_verify(a),
        Command::Bench(a) => run_bench(a),
    }
}

fn options(search: &SearchArgs) -> Result<DecideOptions> {
    if search.threads == 0 {
        bail!("--threads must be at least 1");
    }
    Ok(DecideOptions { budget: search.budget, threads: search.threads, ..DecideOptions::default() })
}

fn status_code(status: Status) -> u8 {
    match status {
        Status::Choosable => EXIT_OK,
        Status::NotChoosable => EXIT_REFUTED,
        Status::Unknown => EXIT_UNKNOWN,
    }
}

fn run_decide(a: DecideArgs) -> Result<u8> {
    let (name, g) = a.source.load()?;
    if a.k == 0 {
        bail!("--k must be at least 1");
    }
    let mode: ChoiceMode = a.mode.into();
    let opts = DecideOptions { strategy: a.strategy.into(), ..options(&a.search)? };
    let verdict = choose::decide(&g, a.k, mode, &opts);
    let certificate = choose::make_certificate(&verdict, &g, a.k, mode).ok();
    if let (Some(path), Some(cert)) = (&a.cert_out, &certificate) {
        fs::write(path, io::certificate_to_json(cert)).with_context(|| format!("writing {}", path.display()))?;
    }
    let code = status_code(verdict.status);
    if a.search.json {
        let doc = ReportDocument::new(Report::Decision(Decision {
            graph_name: name,
            graph: g.to_raw(),
            k: a.k,
            mode,
            verdict,
            certificate,
        }));
        println!("{}", doc.to_json());
    } else {
        println!("{name}: k={} mode={mode:?} => {:?}", a.k, verdict.status);
        println!(
            "assignments checked: {} (exhausted: {}), solver nodes: {}",
            verdict.assignments_checked, verdict.exhausted, verdict.solver_nodes
        );
        if let Some(w) = &verdict.witness {
            println!("witness: {w}");
        }
    }
    Ok(code)
}

fn run_chi_pc(a: ChiPcArgs) -> Result<u8> {
    let (name, g) = a.source.load()?;
    let report = choose::chi_pc(&g, &name, a.k_max, &options(&a.search)?);
    let code = if report.exact.is_some() { EXIT_OK } else { EXIT_UNKNOWN };
    if a.search.json {
        println!("{}", ReportDocument::new(Report::ChiPc(report)).to_json());
    } else {
        for kv in &report.per_k {
            println!("k={}: {:?} ({} assignments)", kv.k, kv.status, kv.assignments_checked);
        }
        match report.exact {
            Some(x) => println!("{name}: chi_pc = {x}"),
            None => println!(
                "{name}: chi_pc >= {} ({:?}); unknown above k_max = {}{}",
                report.lower_bound.value,
                report.lower_bound.reason,
                report.k_max,
                report.upper_bound.as_ref().map(|u| format!(", <= {} ({:?})", u.value, u.reason)).unwrap_or_default()
            ),
        }
    }
    Ok(code)
}

fn run_suite(a: SuiteArgs) -> Result<u8> {
    let opts = options(&a.search)?;
    let mut config = SuiteConfig {
        n_max: a.nmax,
        implication_n_max: a.nmax.min(6),
        budget: opts.budget,
        threads: opts.threads,
        timings: a.timings,
        ..SuiteConfig::default()
    };
    if a.long {
        config.disjoint_star_ks.push(3);
    }
    let report = suite::run_suite(&config);
    let code = if report.totals.refuted > 0 {
        EXIT_REFUTED
    } else if report.totals.skipped_budget > 0 {
        EXIT_UNKNOWN
    } else {
        EXIT_OK
    };
    if a.search.json {
        eprint!("{}", suite::render_text(&report));
        println!("{}", ReportDocument::new(Report::Suite(report)).to_json());
    } else {
        print!("{}", suite::render_text(&report));
    }
    Ok(code)
}

fn run_gen(a: GenArgs) -> Result<u8> {
    let (_, g) = a.source.load()?;
    match a.format {
        GenFormat::Text => print!("{}", io::write_graph(&g)),
        GenFormat::Graph6 => println!("{}", io::to_graph6(&g)),
    }
    Ok(EXIT_OK)
}

fn run_cert_verify(a: CertVerifyArgs) -> Result<u8> {
    let text = fs::read_to_string(&a.file).with_context(|| format!("reading {}", a.file.display()))?;
    let cert = io::certificate_from_json(&text).with_context(|| format!("parsing {}", a.file.display()))?;
    let ok = choose::verify_certificate(&cert);
    if a.json {
        println!("{}", serde_json::json!({ "schema_version": io::SCHEMA_VERSION, "kind": "cert_verify", "valid": ok }));
    } else {
        println!("{}: {}", a.file.display(), if ok { "valid" } else { "INVALID" });
    }
    Ok(if ok { EXIT_OK } else { EXIT_REFUTED })
}

fn run_bench(a: BenchArgs) -> Result<u8> {
    let (name, g) = a.source.load()?;
    if a.k == 0 {
        bail!("--k must be at least 1");
    }
    let strategies: Vec<Strategy> = match a.strategy {
        Some(s) => vec![s.into()],
        None => vec![Strategy::RestrictedGrowth, Strategy::CanonicalFilter],
    };
    let pruning: &[bool] = match a.pruning {
        PruningArg::On => &[true],
        PruningArg::Off => &[false],
        PruningArg::Both => &[true, false],
    };
    let report: BenchReport = bench::bench(&g, &name, a.k, a.mode.into(), &strategies, pruning, &options(&a.search)?);
    let code = if report.agree { EXIT_OK } else { EXIT_REFUTED };
    if a.search.json {
        println!("{}", ReportDocument::new(Report::Bench(report)).to_json());
    } else {
        print!("{}", bench::render_table(&report));
    }
    Ok(code)
}
