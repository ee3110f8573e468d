//! Exhaustive verification driver: enumeration → invariants → bounds.

use std::fmt;
use std::fs;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use randic_core::bounds::{evaluate, BoundError};
use randic_core::enumerate::StreamKind;
use randic_core::{
    canonical_form, decode_graph6, family, invariant_report, to_graph6_string, BoundVerdict, FamilyKind, Graph,
    PredicateId, Status,
};
use serde::{Deserialize, Serialize};

use crate::format::{fmt_opt_real, fmt_real, round_sig};
use crate::CliError;

/// Smallest order every predicate is defined for.
pub const MIN_VERIFY_ORDER: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// Every connected graph.
    All,
    Trees,
    /// Connected graphs with edge connectivity at least 2.
    Kappa2,
}

impl Scope {
    pub fn as_str(&self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::Trees => "trees",
            Scope::Kappa2 => "kappa2",
        }
    }

    pub fn stream(&self) -> StreamKind {
        match self {
            Scope::Trees => StreamKind::Trees,
            Scope::All | Scope::Kappa2 => StreamKind::Connected,
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Scope {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Scope::All),
            "trees" => Ok(Scope::Trees),
            "kappa2" => Ok(Scope::Kappa2),
            _ => Err(CliError::Usage(format!("unknown scope {s:?} (expected all, trees or kappa2)"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub predicate: PredicateId,
    pub n_min: usize,
    pub n_max: usize,
    pub scope: Scope,
    /// Treat every equality case as a failure.
    pub require_strict: bool,
    pub cache_dir: Option<PathBuf>,
}

/// A complete graph checked by a diameter-based bound, kept out of the
/// main tallies.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiameterOneCase {
    pub graph6: String,
    pub status: Status,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub graph6: String,
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationSummary {
    pub predicate: PredicateId,
    pub scope: Scope,
    pub n: usize,
    pub graphs_checked: usize,
    pub applicable: usize,
    pub holds_strict: usize,
    pub holds_equality: usize,
    pub violations: usize,
    /// Violations are findings, not failures.
    pub informational: bool,
    pub require_strict: bool,
    pub violation_witnesses: Vec<Witness>,
    pub equality_cases: Vec<String>,
    /// Equality cases other than the path, for predicates whose equality
    /// case is the path alone.
    pub unexpected_equalities: Vec<String>,
    pub worst_slack: Option<f64>,
    pub worst_witness: Option<String>,
    pub diameter_one: Vec<DiameterOneCase>,
    #[serde(skip)]
    pub elapsed_secs: f64,
}

impl VerificationSummary {
    fn empty(predicate: PredicateId, scope: Scope, n: usize, require_strict: bool) -> Self {
        VerificationSummary {
            predicate,
            scope,
            n,
            graphs_checked: 0,
            applicable: 0,
            holds_strict: 0,
            holds_equality: 0,
            violations: 0,
            informational: predicate.is_informational(),
            require_strict,
            violation_witnesses: Vec::new(),
            equality_cases: Vec::new(),
            unexpected_equalities: Vec::new(),
            worst_slack: None,
            worst_witness: None,
            diameter_one: Vec::new(),
            elapsed_secs: 0.0,
        }
    }

    /// Whether this summary should make `verify` exit with status 1.
    pub fn failed(&self) -> bool {
        let flagged = self.diameter_one.iter().any(|c| c.status == Status::Violated);
        let equality_failed = !self.unexpected_equalities.is_empty() || (self.require_strict && self.holds_equality > 0);
        !self.informational && (self.violations > 0 || flagged || equality_failed)
    }

    fn absorb(&mut self, graph6: String, verdict: &BoundVerdict, path_cert: Option<&str>) {
        self.graphs_checked += 1;
        if verdict.diameter_one {
            self.diameter_one.push(DiameterOneCase {
                graph6,
                status: verdict.status,
                lhs: round_sig(verdict.lhs),
                rhs: round_sig(verdict.rhs),
                slack: round_sig(verdict.slack),
            });
            return;
        }
        if verdict.hypothesis_met {
            self.applicable += 1;
            if self.worst_slack.is_none_or(|w| verdict.slack < w) {
                self.worst_slack = Some(verdict.slack);
                self.worst_witness = Some(graph6.clone());
            }
        }
        match verdict.status {
            Status::HoldsStrict => self.holds_strict += 1,
            Status::HoldsEquality => {
                self.holds_equality += 1;
                if path_cert.is_some_and(|p| p != graph6) {
                    self.unexpected_equalities.push(graph6.clone());
                }
                self.equality_cases.push(graph6);
            }
            Status::Violated => {
                self.violations += 1;
                self.violation_witnesses.push(Witness { graph6, slack: round_sig(verdict.slack) });
            }
            Status::NotApplicable => {}
        }
    }

    fn finish(mut self) -> Self {
        self.worst_slack = self.worst_slack.map(round_sig);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub predicate: PredicateId,
    pub scope: Scope,
    pub n_min: usize,
    pub n_max: usize,
    pub graphs_checked: usize,
    pub violations: usize,
    pub passed: bool,
    pub summaries: Vec<VerificationSummary>,
}

impl VerifyReport {
    pub const CSV_HEADER: &'static str = "predicate,scope,n,graphs_checked,applicable,holds_strict,holds_equality,violations,informational,worst_slack,worst_witness,equality_cases,unexpected_equalities,diameter_one";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for s in &self.summaries {
            let flagged: Vec<String> =
                s.diameter_one.iter().map(|c| format!("{}:{}", c.graph6, fmt_real(c.slack))).collect();
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                s.predicate,
                s.scope,
                s.n,
                s.graphs_checked,
                s.applicable,
                s.holds_strict,
                s.holds_equality,
                s.violations,
                s.informational,
                fmt_opt_real(s.worst_slack),
                s.worst_witness.as_deref().unwrap_or("NA"),
                s.equality_cases.join(" "),
                s.unexpected_equalities.join(" "),
                flagged.join(" "),
            ));
        }
        out
    }

    /// Aligned table for the terminal, including timings.
    pub fn human_table(&self) -> String {
        let mut out = format!(
            "{} over {} graphs, n = {}..{}\n{:>3} {:>8} {:>8} {:>8} {:>8} {:>6} {:>14} {:>9}\n",
            self.predicate, self.scope, self.n_min, self.n_max, "n", "checked", "applic", "strict", "equal", "viol", "worst slack", "secs"
        );
        for s in &self.summaries {
            out.push_str(&format!(
                "{:>3} {:>8} {:>8} {:>8} {:>8} {:>6} {:>14} {:>9.3}\n",
                s.n,
                s.graphs_checked,
                s.applicable,
                s.holds_strict,
                s.holds_equality,
                s.violations,
                fmt_opt_real(s.worst_slack),
                s.elapsed_secs,
            ));
            for w in &s.violation_witnesses {
                out.push_str(&format!("    violation {} slack {}\n", w.graph6, fmt_real(w.slack)));
            }
            for g in &s.unexpected_equalities {
                out.push_str(&format!("    equality off the path {g}\n"));
            }
            if s.require_strict {
                for g in &s.equality_cases {
                    out.push_str(&format!("    equality {g}\n"));
                }
            }
            for c in &s.diameter_one {
                out.push_str(&format!(
                    "    D = 1 {} {:?} lhs {} rhs {}\n",
                    c.graph6,
                    c.status,
                    fmt_real(c.lhs),
                    fmt_real(c.rhs)
                ));
            }
        }
        out.push_str(if self.passed { "result: no violations\n" } else { "result: VIOLATIONS FOUND\n" });
        out
    }
}

/// Predicates whose only equality case is the path.
fn equality_only_at_path(p: PredicateId) -> bool {
    matches!(p, PredicateId::Conjecture1 | PredicateId::Theorem2)
}

pub fn validate(opts: &VerifyOptions) -> Result<(), CliError> {
    let cap = opts.scope.stream().cap();
    if opts.n_min < MIN_VERIFY_ORDER || opts.n_min > opts.n_max || opts.n_max > cap {
        return Err(CliError::Usage(format!(
            "verify over {} needs {MIN_VERIFY_ORDER} <= n-min <= n-max <= {cap}, got {}..{}",
            opts.scope, opts.n_min, opts.n_max
        )));
    }
    Ok(())
}

pub fn run_verify(opts: &VerifyOptions) -> Result<VerifyReport, CliError> {
    validate(opts)?;
    let mut summaries = Vec::new();
    for n in opts.n_min..=opts.n_max {
        let started = std::time::Instant::now();
        let graphs = load_stream(opts.scope.stream(), n, opts.cache_dir.as_deref())?;
        let mut summary = verify_order(opts.predicate, opts.scope, n, opts.require_strict, &graphs)?;
        summary.elapsed_secs = started.elapsed().as_secs_f64();
        summaries.push(summary);
    }
    Ok(VerifyReport {
        predicate: opts.predicate,
        scope: opts.scope,
        n_min: opts.n_min,
        n_max: opts.n_max,
        graphs_checked: summaries.iter().map(|s| s.graphs_checked).sum(),
        violations: summaries.iter().map(|s| s.violations).sum(),
        passed: !summaries.iter().any(VerificationSummary::failed),
        summaries,
    })
}

/// Checks one predicate on every graph of a stream. Graphs are evaluated in
/// parallel and tallied in stream order, so the result does not depend on
/// the thread count.
pub fn verify_order(
    predicate: PredicateId,
    scope: Scope,
    n: usize,
    require_strict: bool,
    graphs: &[Graph],
) -> Result<VerificationSummary, CliError> {
    let verdicts: Vec<Option<BoundVerdict>> = graphs
        .par_iter()
        .map(|g| -> Result<Option<BoundVerdict>, BoundError> {
            let rep = invariant_report(g)?;
            if scope == Scope::Kappa2 && rep.edge_conn < 2 {
                return Ok(None);
            }
            evaluate(predicate, &rep).map(Some)
        })
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Input(format!("n = {n}: {e}")))?;
    let path_cert = if equality_only_at_path(predicate) {
        let p = family(FamilyKind::Path { n }).expect("n is within the family range");
        Some(canonical_form(&p).expect("n is within the canonical cap").to_string())
    } else {
        None
    };
    let mut summary = VerificationSummary::empty(predicate, scope, n, require_strict);
    for (g, verdict) in graphs.iter().zip(verdicts) {
        if let Some(v) = verdict {
            // stream graphs are already canonical
            summary.absorb(to_graph6_string(g), &v, path_cert.as_deref());
        }
    }
    Ok(summary.finish())
}

pub fn cache_path(dir: &Path, kind: StreamKind, n: usize) -> PathBuf {
    dir.join(format!("{kind}_n{n}.g6"))
}

/// The stream for `(kind, n)`, read from the cache when a file exists and
/// written to it otherwise.
pub fn load_stream(kind: StreamKind, n: usize, cache_dir: Option<&Path>) -> Result<Vec<Graph>, CliError> {
    let Some(dir) = cache_dir else {
        return kind.generate(n).map_err(|e| CliError::Usage(e.to_string()));
    };
    let path = cache_path(dir, kind, n);
    if path.exists() {
        let file = fs::File::open(&path).map_err(|e| CliError::io(&path, e))?;
        return read_graph6_lines(BufReader::new(file), &path.display().to_string());
    }
    let graphs = kind.generate(n).map_err(|e| CliError::Usage(e.to_string()))?;
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    // write then rename so an interrupted run never leaves a truncated cache
    let tmp = path.with_extension("g6.tmp");
    let write = || -> io::Result<()> {
        let mut w = BufWriter::new(fs::File::create(&tmp)?);
        write_graph6_lines(&mut w, &graphs)?;
        w.flush()?;
        fs::rename(&tmp, &path)
    };
    write().map_err(|e| CliError::io(&path, e))?;
    Ok(graphs)
}

pub fn write_graph6_lines<W: Write>(w: &mut W, graphs: &[Graph]) -> io::Result<()> {
    for g in graphs {
        w.write_all(&randic_core::encode_graph6(g))?;
        w.write_all(b"\n")?;
    }
    Ok(())
}

/// Newline-delimited graph6, skipping blank lines. Errors name the source
/// and the 1-based line number.
pub fn read_graph6_lines<R: BufRead>(r: R, source: &str) -> Result<Vec<Graph>, CliError> {
    let mut graphs = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line.map_err(|e| CliError::Input(format!("{source}: {e}")))?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let g = decode_graph6(text.as_bytes())
            .map_err(|e| CliError::Input(format!("{source}: line {}: {e}", i + 1)))?;
        graphs.push(g);
    }
    Ok(graphs)
}
