//! Argument definitions and command handlers.

use std::fs;
use std::io::{self, BufReader, Read, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use randic_core::bounds::conjecture2_reference;
use randic_core::enumerate::StreamKind;
use randic_core::family::double_comet_range;
use randic_core::objective::parse_objective;
use randic_core::search::{
    vns_search, Direction, SearchConfig, SearchError, DEFAULT_ITERATIONS, DEFAULT_NEIGHBORHOOD_K, DEFAULT_RESTARTS,
};
use randic_core::{canonical_form, family, invariant_report, to_graph6_string, FamilyKind, Graph, PredicateId};
use serde::Serialize;

use crate::format::{fmt_real, round_sig, InvariantRow};
use crate::verify::{read_graph6_lines, run_verify, write_graph6_lines, Scope, VerifyOptions};
use crate::{CliError, EXIT_OK, EXIT_VIOLATION};

#[derive(Debug, Parser)]
#[command(name = "randic", version, about = "Randić index and algebraic connectivity workbench")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report invariants of graph6 inputs (arguments, --file, or stdin).
    Invariants(InvariantsArgs),
    /// Check a bound over every connected graph (or tree) in an order range.
    Verify(VerifyArgs),
    /// Write one graph6 line per isomorphism class.
    Enumerate(EnumerateArgs),
    /// Variable neighbourhood search for extremal graphs.
    Search(SearchArgs),
    /// Named graph families and the double-comet sweep.
    Families(FamiliesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    /// graph6 strings.
    #[arg(conflicts_with = "file")]
    pub graphs: Vec<String>,
    /// Newline-delimited graph6 file.
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_predicate)]
    pub predicate: PredicateId,
    #[arg(long)]
    pub n_min: usize,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long, default_value = "all", value_parser = parse_scope)]
    pub scope: Scope,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Worker threads for the sweep (default: one per core).
    #[arg(long)]
    pub threads: Option<usize>,
    /// Directory of cached enumeration files, reused when present.
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    /// Fail on equality cases as well as violations.
    #[arg(long)]
    pub strict: bool,
    /// Suppress the table on standard error.
    #[arg(long)]
    pub quiet: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "connected", value_parser = parse_stream_kind)]
    pub kind: StreamKind,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("direction").required(true).args(["minimize", "maximize"])))]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    /// Expression over R, a, D, delta, kappa, n, m.
    #[arg(long)]
    pub objective: String,
    #[arg(long)]
    pub minimize: bool,
    #[arg(long)]
    pub maximize: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_ITERATIONS)]
    pub iters: usize,
    #[arg(long, default_value_t = DEFAULT_RESTARTS)]
    pub restarts: usize,
    /// Largest shake size.
    #[arg(long, default_value_t = DEFAULT_NEIGHBORHOOD_K)]
    pub kmax: usize,
    /// `json` writes the full trace; `csv` writes the objective history.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Path,
    Cycle,
    Complete,
    Star,
    DoubleComet,
    /// The path and every double comet of the order, with `R·a`.
    Sweep,
}

#[derive(Debug, Args)]
pub struct FamiliesArgs {
    #[arg(value_enum)]
    pub kind: FamilyName,
    #[arg(long)]
    pub n: usize,
    /// Leaves on each end of a double comet; all valid values when omitted.
    #[arg(long)]
    pub s: Option<usize>,
    /// Invariant rows instead of bare graph6.
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn parse_predicate(s: &str) -> Result<PredicateId, String> {
    s.parse().map_err(|_| {
        let known: Vec<&str> = PredicateId::ALL.iter().map(|p| p.as_str()).collect();
        format!("unknown predicate (expected one of {})", known.join(", "))
    })
}

fn parse_scope(s: &str) -> Result<Scope, String> {
    s.parse().map_err(|e: CliError| e.to_string())
}

fn parse_stream_kind(s: &str) -> Result<StreamKind, String> {
    s.parse().map_err(|e: randic_core::enumerate::EnumerationError| e.to_string())
}

/// Runs a parsed command. Primary output goes to `--output` or `stdout`;
/// tables and progress go to `stderr`. Returns the exit code.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Invariants(args) => cmd_invariants(args, stdout),
        Command::Verify(args) => cmd_verify(args, stdout, stderr),
        Command::Enumerate(args) => cmd_enumerate(args, stdout, stderr),
        Command::Search(args) => cmd_search(args, stdout),
        Command::Families(args) => cmd_families(args, stdout),
    }
}

fn emit(output: &Option<PathBuf>, stdout: &mut dyn Write, text: &[u8]) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => stdout.write_all(text).map_err(|e| CliError::Io { path: "<stdout>".into(), source: e }),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn rows_text(rows: &[InvariantRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(&rows),
        OutputFormat::Csv => {
            let mut out = format!("{}\n", InvariantRow::CSV_HEADER);
            for r in rows {
                out.push_str(&r.to_csv());
                out.push('\n');
            }
            out
        }
    }
}

fn report_rows(graphs: &[Graph]) -> Result<Vec<InvariantRow>, CliError> {
    graphs
        .iter()
        .map(|g| {
            let rep = invariant_report(g).map_err(|e| CliError::Input(format!("{}: {e}", to_graph6_string(g))))?;
            Ok(InvariantRow::new(g, &rep))
        })
        .collect()
}

fn cmd_invariants(args: InvariantsArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let graphs = if !args.graphs.is_empty() {
        read_graph6_lines(args.graphs.join("\n").as_bytes(), "arguments")?
    } else if let Some(path) = &args.file {
        let file = fs::File::open(path).map_err(|e| CliError::io(path, e))?;
        read_graph6_lines(BufReader::new(file), &path.display().to_string())?
    } else {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        read_graph6_lines(text.as_bytes(), "stdin")?
    };
    let rows = report_rows(&graphs)?;
    emit(&args.output, stdout, rows_text(&rows, args.format).as_bytes())?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    let opts = VerifyOptions {
        predicate: args.predicate,
        n_min: args.n_min,
        n_max: args.n_max,
        scope: args.scope,
        require_strict: args.strict,
        cache_dir: args.cache_dir,
    };
    let report = match args.threads {
        Some(0) => return Err(CliError::Usage("--threads must be positive".into())),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(|| run_verify(&opts))?,
        None => run_verify(&opts)?,
    };
    let text = match args.format {
        OutputFormat::Json => to_json(&report),
        OutputFormat::Csv => report.to_csv(),
    };
    emit(&args.output, stdout, text.as_bytes())?;
    if !args.quiet {
        // best effort: a closed stderr must not turn a result into an error
        let _ = stderr.write_all(report.human_table().as_bytes());
    }
    Ok(if report.passed { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_enumerate(args: EnumerateArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    let graphs = args.kind.generate(args.n).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut text = Vec::new();
    write_graph6_lines(&mut text, &graphs).expect("writing to memory");
    emit(&args.output, stdout, &text)?;
    let _ = writeln!(stderr, "{} {} graphs on {} vertices", graphs.len(), args.kind, args.n);
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct HistoryRow {
    restart: usize,
    iteration: usize,
    value: f64,
}

#[derive(Debug, Serialize)]
struct SearchOutput {
    n: usize,
    objective: String,
    direction: Direction,
    seed: u64,
    max_iterations: usize,
    max_neighborhood_k: usize,
    restarts: usize,
    best_graph6: String,
    best_certificate: String,
    best_value: f64,
    best_restart: usize,
    best_report: InvariantRow,
    iterations: usize,
    moves_attempted: u64,
    moves_accepted: u64,
    history: Vec<HistoryRow>,
}

fn cmd_search(args: SearchArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let objective = parse_objective(&args.objective)
        .map_err(|e| CliError::Usage(format!("objective {:?}: {e}", args.objective)))?;
    let direction = if args.maximize { Direction::Maximize } else { Direction::Minimize };
    let mut cfg = SearchConfig::new(args.n, objective, direction, args.seed);
    cfg.max_iterations = args.iters;
    cfg.restarts = args.restarts;
    cfg.max_neighborhood_k = args.kmax;
    let trace = vns_search(&cfg).map_err(|e| match e {
        SearchError::Objective(_) => CliError::Input(e.to_string()),
        _ => CliError::Usage(e.to_string()),
    })?;
    let history: Vec<HistoryRow> = trace
        .history
        .iter()
        .map(|h| HistoryRow { restart: h.restart, iteration: h.iteration, value: round_sig(h.value) })
        .collect();
    let text = match args.format {
        OutputFormat::Csv => {
            let mut out = String::from("restart,iteration,value\n");
            for h in &history {
                out.push_str(&format!("{},{},{}\n", h.restart, h.iteration, fmt_real(h.value)));
            }
            out
        }
        OutputFormat::Json => {
            let rep = invariant_report(&trace.best_graph).map_err(|e| CliError::Input(e.to_string()))?;
            to_json(&SearchOutput {
                n: cfg.n,
                objective: cfg.objective.source.clone(),
                direction,
                seed: cfg.seed,
                max_iterations: cfg.max_iterations,
                max_neighborhood_k: cfg.max_neighborhood_k,
                restarts: cfg.restarts,
                best_graph6: to_graph6_string(&trace.best_graph),
                best_certificate: canonical_form(&trace.best_graph)
                    .expect("search orders are within the canonical cap")
                    .to_string(),
                best_value: round_sig(trace.best_value),
                best_restart: trace.best_restart,
                best_report: InvariantRow::new(&trace.best_graph, &rep),
                iterations: trace.iterations,
                moves_attempted: trace.moves_attempted,
                moves_accepted: trace.moves_accepted,
                history,
            })
        }
    };
    emit(&args.output, stdout, text.as_bytes())?;
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct SweepRow {
    family: &'static str,
    s: usize,
    graph6: String,
    randic: f64,
    alg_conn: f64,
    product: f64,
    minimum: bool,
}

fn cmd_families(args: FamiliesArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let n = args.n;
    if args.s.is_some() && args.kind != FamilyName::DoubleComet {
        return Err(CliError::Usage("--s only applies to double-comet".into()));
    }
    if args.kind == FamilyName::Sweep {
        return families_sweep(&args, stdout);
    }
    let kinds: Vec<FamilyKind> = match args.kind {
        FamilyName::Path => vec![FamilyKind::Path { n }],
        FamilyName::Cycle => vec![FamilyKind::Cycle { n }],
        FamilyName::Complete => vec![FamilyKind::Complete { n }],
        FamilyName::Star => vec![FamilyKind::Star { n }],
        FamilyName::DoubleComet => match args.s {
            Some(s) => vec![FamilyKind::DoubleComet { n, s }],
            None => double_comet_range(n).map(|s| FamilyKind::DoubleComet { n, s }).collect(),
        },
        FamilyName::Sweep => unreachable!("handled above"),
    };
    if kinds.is_empty() {
        return Err(CliError::Usage(format!("no double comet has order {n}")));
    }
    let graphs = kinds
        .into_iter()
        .map(|k| family(k).map_err(|e| CliError::Usage(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let text = match args.format {
        None => {
            let mut out = Vec::new();
            write_graph6_lines(&mut out, &graphs).expect("writing to memory");
            String::from_utf8(out).expect("graph6 is ASCII")
        }
        Some(format) => rows_text(&report_rows(&graphs)?, format),
    };
    emit(&args.output, stdout, text.as_bytes())?;
    Ok(EXIT_OK)
}

fn families_sweep(args: &FamiliesArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let reference = conjecture2_reference(args.n).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut rows = Vec::new();
    for &(kind, product) in &reference.candidates {
        let g = family(kind).expect("reference candidates are valid");
        let rep = invariant_report(&g).map_err(|e| CliError::Input(e.to_string()))?;
        let s = match kind {
            FamilyKind::DoubleComet { s, .. } => s,
            _ => 0,
        };
        rows.push(SweepRow {
            family: kind.name(),
            s,
            graph6: to_graph6_string(&g),
            randic: round_sig(rep.randic),
            alg_conn: round_sig(rep.alg_conn),
            product: round_sig(product),
            minimum: kind == reference.kind,
        });
    }
    let text = match args.format {
        Some(OutputFormat::Json) => to_json(&rows),
        _ => {
            let mut out = String::from("family,s,graph6,randic,alg_conn,product,minimum\n");
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    r.family,
                    r.s,
                    r.graph6,
                    fmt_real(r.randic),
                    fmt_real(r.alg_conn),
                    fmt_real(r.product),
                    r.minimum
                ));
            }
            out
        }
    };
    emit(&args.output, stdout, text.as_bytes())?;
    Ok(EXIT_OK)
}
