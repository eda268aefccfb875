use std::fmt;
use std::io::{Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tenax_core::{
    all_parameters_with_cap, build_harary_graph, build_min_connectivity_graph,
    build_min_tenacity_graph, enumerate_family, parse_graph6, parse_graph6_lines, to_graph6,
    verify_harary, verify_lemmas, verify_theorem1, verify_theorem2, verify_theorem3, Error, Family,
    FamilySpec, Graph, ParameterKind, ParameterOutcome, VerificationReport, VerificationStatus,
    DEFAULT_EXHAUSTIVE_MAX_ORDER,
};

/// Exact graph vulnerability analysis on small graphs: six cut-based
/// parameters with optimal-cut certificates, extremal constructions,
/// family enumeration, and exhaustive verification of the closed forms.
#[derive(Parser)]
#[command(name = "tenax", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute vulnerability parameters with optimal-cut certificates.
    ///
    /// INPUT is an inline graph6 string, a path to a file holding graph6
    /// lines or an edge list (first line "n m", then m lines "u v",
    /// 0-indexed), or "-" for graph6 lines on stdin. Emits one JSON object
    /// per graph; rationals render as exact "p/q" strings.
    Compute {
        input: String,
        /// Comma-separated subset of: connectivity, toughness, scattering,
        /// integrity, tenacity, rupture; or "all".
        #[arg(long, value_delimiter = ',', default_value = "all")]
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        output: OutputFormat,
        /// Raise the exhaustive-search order guard (default 26). The scan
        /// is exponential in n; expect hours above 30. Expert use only.
        /// The TENAX_MAX_N environment variable does the same.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Emit an extremal construction as a graph6 line.
    Construct {
        target: ConstructTarget,
        #[arg(long)]
        n: usize,
        /// Edge count; required for min-tenacity, harary and
        /// min-connectivity, rejected for the parameter-free targets.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Stream a graph family as graph6 lines, one per graph.
    Enumerate {
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// Edge count; required for connected, rejected otherwise.
        #[arg(long)]
        m: Option<usize>,
        /// Enumerate labeled graphs instead of isomorphism classes
        /// (connected only).
        #[arg(long)]
        labeled: bool,
    },
    /// Re-derive a published claim by exhaustive or seeded-random search.
    ///
    /// Emits one JSON report per sub-claim. Exits 0 when every report is
    /// verified and 1 as soon as any counterexample is found.
    Verify {
        claim: ClaimArg,
        /// Largest order to check. Defaults: theorem1 6, theorem2 10,
        /// theorem3 9, lemmas 16, harary 7.
        #[arg(long)]
        n_max: Option<usize>,
        /// Random sample count (lemmas only).
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Random seed (lemmas only).
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructTarget {
    /// Clique plus independent vertices; minimizes tenacity among
    /// connected (n, m) graphs.
    MinTenacity,
    /// Circulant-style graph attaining connectivity floor(2m/n).
    Harary,
    /// K_{n-1} plus one attached vertex; minimizes connectivity when
    /// m > C(n-1, 2).
    MinConnectivity,
    /// The path P_n, a maximum-tenacity tree for every n.
    ExtremalTree,
    /// The cycle C_n, a maximum-tenacity unicyclic graph for every n.
    ExtremalUnicyclic,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Trees,
    Unicyclic,
    Connected,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClaimArg {
    Theorem1,
    Theorem2,
    Theorem3,
    Lemmas,
    Harary,
}

enum CliError {
    Core(Error),
    Io(std::io::Error),
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_cap_exceeded() => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Compute {
            input,
            params,
            output,
            max_n,
        } => compute(&input, &params, output, max_n),
        Command::Construct { target, n, m } => construct(target, n, m),
        Command::Enumerate {
            family,
            n,
            m,
            labeled,
        } => enumerate(family, n, m, labeled),
        Command::Verify {
            claim,
            n_max,
            samples,
            seed,
        } => verify(claim, n_max, samples, seed),
    }
}

/// Inputs are sniffed rather than flagged: an existing path (or "-") is
/// read and treated as an edge list when its first line is two integers,
/// as graph6 lines otherwise; anything else must be an inline graph6
/// string.
fn load_graphs(input: &str) -> Result<Vec<Graph>, CliError> {
    if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        return parse_payload(&buf);
    }
    if Path::new(input).is_file() {
        let buf = std::fs::read_to_string(input)?;
        return parse_payload(&buf);
    }
    Ok(vec![parse_graph6(input.as_bytes())?])
}

fn parse_payload(buf: &str) -> Result<Vec<Graph>, CliError> {
    let first = buf.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let tokens: Vec<&str> = first.split_whitespace().collect();
    let looks_like_edge_list =
        tokens.len() == 2 && tokens.iter().all(|t| t.chars().all(|c| c.is_ascii_digit()));
    if looks_like_edge_list {
        return Ok(vec![parse_edge_list(buf)?]);
    }
    if buf.trim().is_empty() {
        return Err(CliError::Usage("input contained no graphs".to_string()));
    }
    Ok(parse_graph6_lines(buf)?)
}

fn parse_edge_list(buf: &str) -> Result<Graph, CliError> {
    let bad = |msg: String| CliError::Usage(msg);
    let mut lines = buf.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().expect("caller checked for a header line");
    let mut header_tokens = header.split_whitespace();
    let n: usize = header_tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| bad(format!("edge-list header must be \"n m\", got {header:?}")))?;
    let m: usize = header_tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| bad(format!("edge-list header must be \"n m\", got {header:?}")))?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(bad(format!("edge line must be \"u v\", got {line:?}"))),
        };
        let u: usize = u
            .parse()
            .map_err(|_| bad(format!("invalid vertex {u:?}")))?;
        let v: usize = v
            .parse()
            .map_err(|_| bad(format!("invalid vertex {v:?}")))?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(bad(format!(
            "edge list declares {m} edges but contains {}",
            edges.len()
        )));
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

fn parse_params(params: &[String]) -> Result<Vec<ParameterKind>, CliError> {
    if params.iter().any(|p| p == "all") {
        return Ok(ParameterKind::ALL.to_vec());
    }
    let mut kinds = Vec::new();
    for p in params {
        let kind = ParameterKind::parse(p).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown parameter {p:?}; expected one of connectivity, toughness, \
                 scattering, integrity, tenacity, rupture, all"
            ))
        })?;
        if !kinds.contains(&kind) {
            kinds.push(kind);
        }
    }
    Ok(kinds)
}

fn exhaustive_cap(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("TENAX_MAX_N")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_EXHAUSTIVE_MAX_ORDER)
}

fn compute(
    input: &str,
    params: &[String],
    output: OutputFormat,
    max_n: Option<usize>,
) -> Result<ExitCode, CliError> {
    let kinds = parse_params(params)?;
    let cap = exhaustive_cap(max_n);
    let graphs = load_graphs(input)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for g in &graphs {
        let outcomes = all_parameters_with_cap(g, cap)?;
        let selected: Vec<&ParameterOutcome> = kinds
            .iter()
            .map(|kind| {
                outcomes
                    .iter()
                    .find(|o| match o {
                        ParameterOutcome::Defined(r) => r.parameter == *kind,
                        ParameterOutcome::UndefinedForComplete(k) => k == kind,
                    })
                    .expect("engine reports every parameter")
            })
            .collect();
        match output {
            OutputFormat::Json => {
                writeln!(out, "{}", graph_json(g, &selected))?;
            }
            OutputFormat::Table => write_table(&mut out, g, &selected)?,
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn graph_json(g: &Graph, outcomes: &[&ParameterOutcome]) -> Value {
    let results: Vec<Value> = outcomes
        .iter()
        .map(|outcome| match outcome {
            ParameterOutcome::Defined(r) => {
                let certificate = r.certificate.as_ref().map_or(Value::Null, |c| {
                    json!({
                        "cut": c.cut.to_vec(),
                        "cut_size": c.cut_size,
                        "omega": c.omega,
                        "tau": c.tau,
                    })
                });
                json!({
                    "parameter": r.parameter.name(),
                    "value": r.value.to_string(),
                    "certificate": certificate,
                })
            }
            ParameterOutcome::UndefinedForComplete(kind) => json!({
                "parameter": kind.name(),
                "value": Value::Null,
                "note": "undefined for complete graphs",
            }),
        })
        .collect();
    json!({
        "graph6": to_graph6(g),
        "n": g.n(),
        "m": g.edge_count(),
        "parameters": results,
    })
}

fn write_table(
    out: &mut impl Write,
    g: &Graph,
    outcomes: &[&ParameterOutcome],
) -> Result<(), CliError> {
    writeln!(
        out,
        "{} (n={}, m={})",
        to_graph6(g),
        g.n(),
        g.edge_count()
    )?;
    writeln!(
        out,
        "  {:<13} {:>8}  {:<16} {:>5} {:>5}",
        "parameter", "value", "cut", "omega", "tau"
    )?;
    for outcome in outcomes {
        match outcome {
            ParameterOutcome::Defined(r) => {
                let (cut, omega, tau) = match &r.certificate {
                    Some(c) => (
                        format!("{}", c.cut),
                        c.omega.to_string(),
                        c.tau.to_string(),
                    ),
                    None => ("-".to_string(), "-".to_string(), "-".to_string()),
                };
                writeln!(
                    out,
                    "  {:<13} {:>8}  {:<16} {:>5} {:>5}",
                    r.parameter.name(),
                    r.value.to_string(),
                    cut,
                    omega,
                    tau
                )?;
            }
            ParameterOutcome::UndefinedForComplete(kind) => {
                writeln!(
                    out,
                    "  {:<13} {:>8}  undefined for complete graphs",
                    kind.name(),
                    "-"
                )?;
            }
        }
    }
    Ok(())
}

fn construct(target: ConstructTarget, n: usize, m: Option<usize>) -> Result<ExitCode, CliError> {
    let needs_m = matches!(
        target,
        ConstructTarget::MinTenacity | ConstructTarget::Harary | ConstructTarget::MinConnectivity
    );
    let g = if needs_m {
        let m = m.ok_or_else(|| CliError::Usage("this target requires --m".to_string()))?;
        match target {
            ConstructTarget::MinTenacity => build_min_tenacity_graph(n, m)?,
            ConstructTarget::Harary => build_harary_graph(n, m)?,
            ConstructTarget::MinConnectivity => build_min_connectivity_graph(n, m)?,
            _ => unreachable!(),
        }
    } else {
        if m.is_some() {
            return Err(CliError::Usage(
                "this target takes only --n; drop --m".to_string(),
            ));
        }
        match target {
            ConstructTarget::ExtremalTree => Graph::path(n)?,
            ConstructTarget::ExtremalUnicyclic => Graph::cycle(n)?,
            _ => unreachable!(),
        }
    };
    println!("{}", to_graph6(&g));
    Ok(ExitCode::SUCCESS)
}

fn enumerate(
    family: FamilyArg,
    n: usize,
    m: Option<usize>,
    labeled: bool,
) -> Result<ExitCode, CliError> {
    let family = match family {
        FamilyArg::Trees => Family::Trees,
        FamilyArg::Unicyclic => Family::Unicyclic,
        FamilyArg::Connected => Family::Connected,
    };
    let graphs = enumerate_family(FamilySpec {
        family,
        n,
        m,
        labeled,
    })?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for g in &graphs {
        writeln!(out, "{}", to_graph6(g))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(
    claim: ClaimArg,
    n_max: Option<usize>,
    samples: usize,
    seed: u64,
) -> Result<ExitCode, CliError> {
    let reports: Vec<VerificationReport> = match claim {
        ClaimArg::Theorem1 => verify_theorem1(n_max.unwrap_or(6))?,
        ClaimArg::Theorem2 => verify_theorem2(n_max.unwrap_or(10))?,
        ClaimArg::Theorem3 => verify_theorem3(n_max.unwrap_or(9))?,
        ClaimArg::Lemmas => verify_lemmas(n_max.unwrap_or(16), samples, seed)?,
        ClaimArg::Harary => verify_harary(n_max.unwrap_or(7))?,
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut failed = false;
    for report in &reports {
        writeln!(out, "{}", report.to_json())?;
        failed |= report.status == VerificationStatus::Counterexample;
    }
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
