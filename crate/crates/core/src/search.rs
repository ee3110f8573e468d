//! Variable neighbourhood search for extremal connected graphs.
//!
//! Each restart begins at the path `P_n`. A step is either a best-improvement
//! scan of the one-edge neighbourhood (add a non-edge, delete an edge,
//! rotate an edge `uv` to `uw`) or a shake of `k` random moves applied to the
//! restart's incumbent, with `k` cycling through `1..=max_neighborhood_k`.
//! Only connected graphs are ever visited. Everything is driven by
//! [`SplitMix64`], so a configuration fully determines the trace.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_key, MAX_CANON_ORDER};
use crate::family::{family, FamilyKind};
use crate::flow::edge_connectivity;
use crate::graph::Graph;
use crate::invariants::{diameter, invariant_report, randic_index, InvariantReport};
use crate::objective::{EvalError, Expr, ObjectiveExpr, Symbol};
use crate::spectrum::laplacian_eigenvalues;

/// Two objective values closer than this are treated as tied.
pub const VALUE_TOLERANCE: f64 = 1e-12;

pub const DEFAULT_ITERATIONS: usize = 10_000;
pub const DEFAULT_RESTARTS: usize = 5;
pub const DEFAULT_NEIGHBORHOOD_K: usize = 3;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("search needs 3 <= n <= {MAX_CANON_ORDER}, got {0}")]
    OrderOutOfRange(usize),
    #[error("{0} must be positive")]
    ZeroBudget(&'static str),
    #[error("objective cannot be evaluated on the best graph: {0}")]
    Objective(#[from] EvalError),
}

/// SplitMix64: `state += 0x9E3779B97F4A7C15`, then two xor-shift-multiply
/// rounds. Bounded draws use the high half of a 128-bit product.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw from `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: usize) -> usize {
        ((self.next_u64() as u128 * bound as u128) >> 64) as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub n: usize,
    pub objective: ObjectiveExpr,
    pub direction: Direction,
    pub seed: u64,
    pub max_iterations: usize,
    pub max_neighborhood_k: usize,
    pub restarts: usize,
}

impl SearchConfig {
    /// Default budget: 10⁴ iterations, 5 restarts, shakes up to 3 moves.
    pub fn new(n: usize, objective: ObjectiveExpr, direction: Direction, seed: u64) -> Self {
        SearchConfig {
            n,
            objective,
            direction,
            seed,
            max_iterations: DEFAULT_ITERATIONS,
            max_neighborhood_k: DEFAULT_NEIGHBORHOOD_K,
            restarts: DEFAULT_RESTARTS,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HistoryPoint {
    pub restart: usize,
    pub iteration: usize,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchTrace {
    pub best_graph: Graph,
    pub best_value: f64,
    /// Restart that produced `best_graph`.
    pub best_restart: usize,
    /// Incumbent improvements of every restart, in restart order.
    pub history: Vec<HistoryPoint>,
    pub iterations: usize,
    pub moves_attempted: u64,
    pub moves_accepted: u64,
    pub seed: u64,
}

pub fn vns_search(cfg: &SearchConfig) -> Result<SearchTrace, SearchError> {
    if !(3..=MAX_CANON_ORDER).contains(&cfg.n) {
        return Err(SearchError::OrderOutOfRange(cfg.n));
    }
    for (value, name) in [
        (cfg.max_iterations, "max_iterations"),
        (cfg.max_neighborhood_k, "max_neighborhood_k"),
        (cfg.restarts, "restarts"),
    ] {
        if value == 0 {
            return Err(SearchError::ZeroBudget(name));
        }
    }

    let runs: Vec<RestartResult> = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| run_restart(cfg, r))
        .collect();

    let mut winner = 0;
    for (i, run) in runs.iter().enumerate() {
        if run.best_score < runs[winner].best_score - VALUE_TOLERANCE {
            winner = i;
        }
    }
    let best_graph = runs[winner].best.clone();
    let report = invariant_report(&best_graph).expect("best graph is connected");
    let best_value = cfg.objective.eval(&report)?;

    Ok(SearchTrace {
        best_graph,
        best_value,
        best_restart: winner,
        history: runs.iter().flat_map(|r| r.history.iter().copied()).collect(),
        iterations: runs.iter().map(|r| r.iterations).sum(),
        moves_attempted: runs.iter().map(|r| r.attempted).sum(),
        moves_accepted: runs.iter().map(|r| r.accepted).sum(),
        seed: cfg.seed,
    })
}

struct RestartResult {
    best: Graph,
    best_score: f64,
    history: Vec<HistoryPoint>,
    iterations: usize,
    attempted: u64,
    accepted: u64,
}

/// Objective evaluation restricted to the invariants the expression uses,
/// memoised per labeled graph. Scores are oriented so lower is better.
struct Evaluator<'a> {
    objective: &'a ObjectiveExpr,
    sign: f64,
    needs: Needs,
    memo: HashMap<Graph, Option<f64>>,
}

#[derive(Default, Clone, Copy)]
struct Needs {
    spectrum: bool,
    diameter: bool,
    edge_conn: bool,
}

impl Needs {
    fn of(e: &Expr) -> Needs {
        let mut needs = Needs::default();
        needs.visit(e);
        needs
    }

    fn visit(&mut self, e: &Expr) {
        match e {
            Expr::Var(Symbol::AlgConn) => self.spectrum = true,
            Expr::Var(Symbol::Diameter) => self.diameter = true,
            Expr::Var(Symbol::EdgeConn) => self.edge_conn = true,
            Expr::Neg(inner) | Expr::Call(_, inner) => self.visit(inner),
            Expr::Binary(_, l, r) => {
                self.visit(l);
                self.visit(r);
            }
            _ => {}
        }
    }
}

impl Evaluator<'_> {
    /// `None` when the objective cannot be evaluated (treated as infeasible).
    fn score(&mut self, g: &Graph) -> Option<f64> {
        if let Some(&cached) = self.memo.get(g) {
            return cached;
        }
        let value = self.report(g).and_then(|rep| self.objective.eval(&rep).ok());
        let score = value.map(|v| self.sign * v);
        self.memo.insert(g.clone(), score);
        score
    }

    /// A report with only the needed expensive fields filled in; the
    /// expression never reads the others.
    fn report(&self, g: &Graph) -> Option<InvariantReport> {
        let degrees = g.degrees();
        let m = g.edge_count();
        let alg_conn = if self.needs.spectrum {
            laplacian_eigenvalues(g).ok()?.get(1).copied().unwrap_or(0.0)
        } else {
            0.0
        };
        Some(InvariantReport {
            n: g.order(),
            m,
            randic: randic_index(g),
            alg_conn,
            diameter: if self.needs.diameter { diameter(g).ok() } else { None },
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            edge_conn: if self.needs.edge_conn { edge_connectivity(g) } else { 0 },
            is_regular: degrees.windows(2).all(|w| w[0] == w[1]),
            is_tree: m + 1 == g.order(),
            is_connected: true,
            degrees,
        })
    }
}

/// Every connected graph one edge move away from `g`, in a fixed order:
/// additions, deletions, then rotations.
fn neighbours(g: &Graph) -> Vec<Graph> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                out.push(g.with_edge(u, v));
            }
        }
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for &(u, v) in &edges {
        let h = g.without_edge(u, v);
        if h.is_connected() {
            out.push(h);
        }
    }
    for &(u, v) in &edges {
        for (keep, drop) in [(u, v), (v, u)] {
            let base = g.without_edge(keep, drop);
            for w in 0..n {
                if w != keep && w != drop && !g.has_edge(keep, w) {
                    let h = base.with_edge(keep, w);
                    if h.is_connected() {
                        out.push(h);
                    }
                }
            }
        }
    }
    out
}

fn run_restart(cfg: &SearchConfig, restart: usize) -> RestartResult {
    let mut rng = SplitMix64::new(cfg.seed.wrapping_add(restart as u64));
    let mut eval = Evaluator {
        objective: &cfg.objective,
        sign: match cfg.direction {
            Direction::Minimize => 1.0,
            Direction::Maximize => -1.0,
        },
        needs: Needs::of(&cfg.objective.root),
        memo: HashMap::new(),
    };
    let sign = eval.sign;

    let start = family(FamilyKind::Path { n: cfg.n }).expect("n validated");
    let start_score = eval.score(&start).unwrap_or(f64::INFINITY);
    let mut incumbent = start.clone();
    let mut incumbent_score = start_score;
    let mut history = vec![HistoryPoint { restart, iteration: 0, value: sign * start_score }];
    let mut current = start;
    let mut current_score = start_score;
    let mut k = 1;
    let mut iteration = 0;
    let (mut attempted, mut accepted) = (0u64, 0u64);

    while iteration < cfg.max_iterations {
        // best-improvement descent
        while iteration < cfg.max_iterations {
            iteration += 1;
            let candidates = neighbours(&current);
            attempted += candidates.len() as u64;
            let scored: Vec<(f64, Graph)> = candidates
                .into_iter()
                .filter_map(|h| eval.score(&h).map(|s| (s, h)))
                .collect();
            let Some(best) = pick_best(scored) else { break };
            if best.0 < current_score - VALUE_TOLERANCE {
                current = best.1;
                current_score = best.0;
                accepted += 1;
                assert!(current.is_connected());
            } else {
                break;
            }
        }

        if current_score < incumbent_score - VALUE_TOLERANCE {
            incumbent = current.clone();
            incumbent_score = current_score;
            history.push(HistoryPoint { restart, iteration, value: sign * incumbent_score });
            k = 1;
        } else {
            k = k % cfg.max_neighborhood_k + 1;
        }

        if iteration >= cfg.max_iterations {
            break;
        }
        iteration += 1;
        current = incumbent.clone();
        for _ in 0..k {
            let moves = neighbours(&current);
            if moves.is_empty() {
                break;
            }
            current = moves[rng.below(moves.len())].clone();
            attempted += 1;
            accepted += 1;
            assert!(current.is_connected());
        }
        current_score = eval.score(&current).unwrap_or(f64::INFINITY);
    }

    RestartResult {
        best: incumbent,
        best_score: incumbent_score,
        history,
        iterations: iteration,
        attempted,
        accepted,
    }
}

/// Lowest score; ties within [`VALUE_TOLERANCE`] go to the smallest canonical
/// certificate, then to the earliest candidate.
fn pick_best(scored: Vec<(f64, Graph)>) -> Option<(f64, Graph)> {
    let min = scored.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
    if !min.is_finite() {
        return None;
    }
    let mut tied = scored.into_iter().filter(|c| c.0 <= min + VALUE_TOLERANCE);
    let first = tied.next()?;
    let mut best_key = canonical_key(&first.1).expect("order within cap");
    let mut best = first;
    for cand in tied {
        let key = canonical_key(&cand.1).expect("order within cap");
        if key < best_key {
            best_key = key;
            best = cand;
        }
    }
    Some(best)
}
