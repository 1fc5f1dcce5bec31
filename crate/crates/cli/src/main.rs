use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use alpha_spectra::enumeration::{
    all_connected_graphs, all_trees, graphs_with_cut_vertices, trees_with_matching, EnumBudget, EnumError,
};
use alpha_spectra::families::FamilySpec;
use alpha_spectra::spectral::{spectral_radius, AlphaParam, SpectralError};
use alpha_spectra::verify::{run_suite, Claim, Report, Status, VerifyConfig, VerifyError, DEFAULT_TOLERANCE};
use alpha_spectra::Graph;
use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_FAIL: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "alpha-spectra", version, about = "A_alpha spectral radii, extremal families and claim verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rho_alpha, residual and iteration count for one graph.
    Rho(RhoArgs),
    /// Run a verification suite and write a report.
    Verify(VerifyArgs),
    /// List trees or connected graphs in graph6, one per line.
    Enum(EnumArgs),
}

#[derive(Args)]
struct RhoArgs {
    /// Family spec such as gnk:7,3, gpsq:cycle4,p=3,s=1,q=1 or smith:H6
    #[arg(long, conflicts_with = "graph6", required_unless_present = "graph6")]
    family: Option<String>,
    /// Graph in graph6 form
    #[arg(long)]
    graph6: Option<String>,
    /// Comma separated alpha values in [0, 1)
    #[arg(long, value_delimiter = ',', default_value = "0")]
    alpha: Vec<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    /// lemma1, lemma2, theorem1, theorem2, theorem3, transformation-a, smith or all
    claim: String,
    /// Order range such as 4..10 or a single order
    #[arg(long)]
    n: Option<String>,
    /// Comma separated alpha grid
    #[arg(long, value_delimiter = ',')]
    alpha: Option<Vec<f64>>,
    /// Worker threads; defaults to the available parallelism
    #[arg(long)]
    jobs: Option<usize>,
    /// Report path; the report goes to stdout when omitted
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    /// Seed for sampled Lemma 1 shifts
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Lemma 1 instances per order and alpha
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    /// Leave elapsed times out of the report so runs compare byte for byte
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    Trees,
    Graphs,
}

#[derive(Args)]
struct EnumArgs {
    kind: EnumKind,
    #[arg(long)]
    n: usize,
    /// Keep trees with this matching number
    #[arg(long)]
    matching: Option<usize>,
    /// Keep graphs with this many cut vertices
    #[arg(long)]
    cut_vertices: Option<usize>,
    /// Print the count only
    #[arg(long)]
    count: bool,
}

/// Error paired with the exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn usage(error: impl Into<anyhow::Error>) -> Self {
        Failure { code: EXIT_USAGE, error: error.into() }
    }

    fn runtime(error: impl Into<anyhow::Error>) -> Self {
        Failure { code: EXIT_FAIL, error: error.into() }
    }
}

fn usage_msg(msg: String) -> Failure {
    Failure::usage(anyhow::anyhow!(msg))
}

fn budget() -> Result<EnumBudget, Failure> {
    EnumBudget::from_env()
        .with_context(|| format!("reading {}", alpha_spectra::enumeration::BUDGET_ENV))
        .map_err(Failure::usage)
}

fn alphas(values: &[f64]) -> Result<Vec<AlphaParam<f64>>, Failure> {
    values.iter().map(|&a| AlphaParam::new(a).map_err(Failure::usage)).collect()
}

fn cmd_rho(args: RhoArgs) -> Result<u8, Failure> {
    let (label, graph) = match (&args.family, &args.graph6) {
        (Some(text), _) => {
            let spec: FamilySpec = text.parse().with_context(|| format!("family spec '{text}'")).map_err(Failure::usage)?;
            (text.clone(), spec.build().map_err(Failure::usage)?)
        }
        (None, Some(text)) => {
            let g = Graph::from_graph6(text).with_context(|| format!("graph6 '{text}'")).map_err(Failure::usage)?;
            (text.clone(), g)
        }
        (None, None) => return Err(usage_msg("one of --family or --graph6 is required".into())),
    };
    let grid = alphas(&args.alpha)?;
    if !graph.is_connected() {
        return Err(usage_msg(format!("{label}: graph is disconnected; rho is only reported for connected graphs")));
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut rows = vec![format!("{:<24} {:>3} {:>4} {:>6} {:>22} {:>10} {:>6}", "graph", "n", "m", "alpha", "rho", "residual", "iters")];
    for a in &grid {
        let r = spectral_radius(&graph, a).map_err(|e| match e {
            SpectralError::Disconnected | SpectralError::EmptyGraph => Failure::usage(e),
            other => Failure::runtime(other),
        })?;
        rows.push(format!(
            "{:<24} {:>3} {:>4} {:>6} {:>22.15} {:>10.1e} {:>6}",
            label,
            graph.n(),
            graph.m(),
            a.value(),
            r.rho,
            r.residual,
            r.iterations
        ));
    }
    for row in rows {
        writeln!(out, "{row}").map_err(Failure::runtime)?;
    }
    Ok(0)
}

fn parse_range(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || usage_msg(format!("bad --n '{text}', expected N, A..B or A..=B"));
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match text.split_once("..") {
        Some((lo, hi)) => {
            let lo = parse(lo)?;
            let hi = parse(hi.strip_prefix('=').unwrap_or(hi))?;
            if lo > hi {
                return Err(bad());
            }
            Ok((lo, hi))
        }
        None => {
            let n = parse(text)?;
            Ok((n, n))
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Failure> {
    let claims: Vec<Claim> = if args.claim.eq_ignore_ascii_case("all") {
        Claim::ALL.to_vec()
    } else {
        vec![args.claim.parse().map_err(Failure::usage)?]
    };
    let mut config = VerifyConfig {
        budget: budget()?,
        tolerance: args.tolerance,
        seed: args.seed,
        lemma1_trials: args.trials,
        n_range: args.n.as_deref().map(parse_range).transpose()?,
        timing: !args.no_timing,
        ..VerifyConfig::default()
    };
    if let Some(grid) = args.alpha {
        config.alpha_grid = grid;
    }
    config.validate().map_err(Failure::usage)?;
    for &claim in &claims {
        config.n_range_for(claim).map_err(|e| usage_msg(format!("refusing to run: {e}")))?;
    }
    let jobs = args.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if jobs == 0 {
        return Err(usage_msg("--jobs must be at least 1".into()));
    }
    let report = run_suite(&claims, &config, jobs).map_err(|e| match e {
        VerifyError::OverBudget { .. } | VerifyError::InvalidGrid(_) => Failure::usage(e),
        other => Failure::runtime(other),
    })?;
    match &args.output {
        Some(path) => {
            let file = File::create(path).with_context(|| format!("creating {}", path.display())).map_err(Failure::runtime)?;
            write_report(&report, args.format, BufWriter::new(file))?;
            print_summary(&report, &mut io::stdout().lock())?;
        }
        None => {
            write_report(&report, args.format, io::stdout().lock())?;
            print_summary(&report, &mut io::stderr().lock())?;
        }
    }
    Ok(match report.status() {
        Status::Pass => 0,
        Status::Inconclusive => EXIT_INCONCLUSIVE,
        Status::Fail => EXIT_FAIL,
    })
}

fn write_report<W: Write>(report: &Report, format: ReportFormat, mut out: W) -> Result<(), Failure> {
    match format {
        ReportFormat::Json => report.write_json(&mut out).map_err(Failure::runtime)?,
        ReportFormat::Csv => report.write_csv(&mut out).map_err(Failure::runtime)?,
    }
    out.flush().map_err(Failure::runtime)
}

fn print_summary<W: Write>(report: &Report, out: &mut W) -> Result<(), Failure> {
    for s in report.summaries() {
        let margin = if s.min_margin.is_finite() { format!("{:.3e}", s.min_margin) } else { s.min_margin.to_string() };
        writeln!(
            out,
            "{:<16} {:<12} cells={} pass={} inconclusive={} fail={} min_margin={}",
            s.claim.name(),
            s.status().as_str(),
            s.cells,
            s.pass,
            s.inconclusive,
            s.fail,
            margin
        )
        .map_err(Failure::runtime)?;
    }
    Ok(())
}

fn cmd_enum(args: EnumArgs) -> Result<u8, Failure> {
    let budget = budget()?;
    let usage = |e: EnumError| match e {
        EnumError::Graph(_) => Failure::runtime(e),
        _ => Failure::usage(e),
    };
    let graphs = match (args.kind, args.matching, args.cut_vertices) {
        (EnumKind::Trees, _, Some(_)) => return Err(usage_msg("--cut-vertices applies to graphs".into())),
        (EnumKind::Graphs, Some(_), _) => return Err(usage_msg("--matching applies to trees".into())),
        (EnumKind::Trees, Some(k), None) => trees_with_matching(args.n, k, &budget).map_err(usage)?,
        (EnumKind::Trees, None, None) => all_trees(args.n, &budget).map_err(usage)?,
        (EnumKind::Graphs, None, Some(k)) => graphs_with_cut_vertices(args.n, k, &budget).map_err(usage)?,
        (EnumKind::Graphs, None, None) => all_connected_graphs(args.n, &budget).map_err(usage)?,
    };
    let mut out = BufWriter::new(io::stdout().lock());
    if args.count {
        writeln!(out, "{}", graphs.len()).map_err(Failure::runtime)?;
    } else {
        for g in &graphs {
            writeln!(out, "{}", g.to_graph6().map_err(Failure::runtime)?).map_err(Failure::runtime)?;
        }
    }
    out.flush().map_err(Failure::runtime)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Rho(args) => cmd_rho(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Enum(args) => cmd_enum(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
