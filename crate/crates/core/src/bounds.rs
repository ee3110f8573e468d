//! The Randić / algebraic-connectivity inequalities as graded predicates.
//!
//! Every check produces a [`BoundVerdict`] carrying the raw `lhs` and `rhs`
//! so callers can re-grade with another tolerance. `slack` is oriented so
//! that a positive value means the inequality holds.

use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::family::{double_comet_range, family, FamilyKind};
use crate::graph::Graph;
use crate::invariants::{invariant_report, InvariantError, InvariantReport};

/// `|slack|` at or below this grades as equality.
pub const EQUALITY_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("bound needs n >= 3, got {0}")]
    OrderTooSmall(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("algebraic connectivity {0} is not positive")]
    NonPositiveConnectivity(f64),
    #[error("minimum degree is zero")]
    ZeroMinDegree,
    #[error("unknown predicate {0:?}")]
    UnknownPredicate(String),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PredicateId {
    /// `R/a <= ((n-3+2√2)/2) / (2(1-cos π/n))`, equality only for the path.
    Conjecture1,
    /// `a >= 2κ′(1-cos π/n)`.
    Lemma1Kappa,
    /// `a >= 2δ-n+2`.
    Lemma1Degree,
    /// `D >= 4/(na)`.
    Lemma2,
    /// `R/δ >= n/(2(n-1))`.
    Lemma5Lower,
    /// `R/δ <= (3n-7+√6+3√2)/6`.
    Lemma5Upper,
    /// `R/a <= (n/2) / (2(1-cos π/n))` when `κ′ = 1`.
    Theorem1Kappa1,
    /// The conjecture inequality when `D <= 2(n-3+2√2)/π²` or `δ >= n/2`.
    Theorem2,
    /// `R·a >= 8√(n-1)/(nD²)`.
    Theorem3Diameter,
    /// `R·a >= nδ(2δ-n+2)/(2(n-1))`.
    Theorem3Degree,
}

impl PredicateId {
    pub const ALL: [PredicateId; 10] = [
        PredicateId::Conjecture1,
        PredicateId::Lemma1Kappa,
        PredicateId::Lemma1Degree,
        PredicateId::Lemma2,
        PredicateId::Lemma5Lower,
        PredicateId::Lemma5Upper,
        PredicateId::Theorem1Kappa1,
        PredicateId::Theorem2,
        PredicateId::Theorem3Diameter,
        PredicateId::Theorem3Degree,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            PredicateId::Conjecture1 => "conjecture1",
            PredicateId::Lemma1Kappa => "lemma1_kappa",
            PredicateId::Lemma1Degree => "lemma1_degree",
            PredicateId::Lemma2 => "lemma2",
            PredicateId::Lemma5Lower => "lemma5_lower",
            PredicateId::Lemma5Upper => "lemma5_upper",
            PredicateId::Theorem1Kappa1 => "theorem1_kappa1",
            PredicateId::Theorem2 => "theorem2",
            PredicateId::Theorem3Diameter => "theorem3_diameter",
            PredicateId::Theorem3Degree => "theorem3_degree",
        }
    }

    /// Checks whose violations are reported as findings only.
    pub fn is_informational(&self) -> bool {
        matches!(self, PredicateId::Lemma1Kappa)
    }
}

impl fmt::Display for PredicateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PredicateId {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PredicateId::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| BoundError::UnknownPredicate(s.to_owned()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    HoldsStrict,
    HoldsEquality,
    Violated,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundVerdict {
    pub predicate: PredicateId,
    pub status: Status,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub hypothesis_met: bool,
    /// Set on diameter-based product checks of complete graphs (`D = 1`),
    /// which the product bound's derivation does not cover.
    pub diameter_one: bool,
}

#[derive(Clone, Copy)]
enum Sense {
    /// `lhs <= rhs`
    AtMost,
    /// `lhs >= rhs`
    AtLeast,
}

fn verdict(predicate: PredicateId, sense: Sense, lhs: f64, rhs: f64, hypothesis_met: bool) -> BoundVerdict {
    let slack = match sense {
        Sense::AtMost => rhs - lhs,
        Sense::AtLeast => lhs - rhs,
    };
    BoundVerdict {
        predicate,
        status: grade(slack, hypothesis_met),
        lhs,
        rhs,
        slack,
        hypothesis_met,
        diameter_one: false,
    }
}

/// Grades an oriented slack at [`EQUALITY_TOLERANCE`].
pub fn grade(slack: f64, hypothesis_met: bool) -> Status {
    if !hypothesis_met {
        Status::NotApplicable
    } else if slack.abs() <= EQUALITY_TOLERANCE {
        Status::HoldsEquality
    } else if slack > 0.0 {
        Status::HoldsStrict
    } else {
        Status::Violated
    }
}

fn one_minus_cos_pi_over(n: usize) -> f64 {
    1.0 - (PI / n as f64).cos()
}

/// `(n-3+2√2)/2`, the Randić index of the path `P_n`.
pub fn path_randic(n: usize) -> f64 {
    (n as f64 - 3.0 + 2.0 * SQRT_2) / 2.0
}

/// `2(1-cos π/n)`, the algebraic connectivity of the path `P_n`.
pub fn path_algebraic_connectivity(n: usize) -> f64 {
    2.0 * one_minus_cos_pi_over(n)
}

/// Right-hand side of the conjectured `R/a` upper bound.
pub fn conjecture1_bound(n: usize) -> Result<f64, BoundError> {
    if n < 3 {
        return Err(BoundError::OrderTooSmall(n));
    }
    Ok(path_randic(n) / path_algebraic_connectivity(n))
}

fn connected(rep: &InvariantReport) -> Result<(), BoundError> {
    if rep.is_connected {
        Ok(())
    } else {
        Err(BoundError::Disconnected)
    }
}

fn ratio_r_over_a(rep: &InvariantReport) -> Result<f64, BoundError> {
    connected(rep)?;
    if rep.n < 3 {
        return Err(BoundError::OrderTooSmall(rep.n));
    }
    if rep.alg_conn <= 0.0 {
        return Err(BoundError::NonPositiveConnectivity(rep.alg_conn));
    }
    Ok(rep.randic / rep.alg_conn)
}

pub fn check_conjecture1(rep: &InvariantReport) -> Result<BoundVerdict, BoundError> {
    let lhs = ratio_r_over_a(rep)?;
    Ok(verdict(PredicateId::Conjecture1, Sense::AtMost, lhs, conjecture1_bound(rep.n)?, true))
}

/// The `κ′` and `δ` lower bounds on `a`, in that order.
pub fn lemma1_bounds(rep: &InvariantReport) -> Result<(BoundVerdict, BoundVerdict), BoundError> {
    connected(rep)?;
    let n = rep.n as f64;
    let kappa = verdict(
        PredicateId::Lemma1Kappa,
        Sense::AtLeast,
        rep.alg_conn,
        2.0 * rep.edge_conn as f64 * one_minus_cos_pi_over(rep.n),
        true,
    );
    let degree = verdict(
        PredicateId::Lemma1Degree,
        Sense::AtLeast,
        rep.alg_conn,
        2.0 * rep.min_degree as f64 - n + 2.0,
        true,
    );
    Ok((kappa, degree))
}

pub fn lemma2_bound(rep: &InvariantReport) -> Result<BoundVerdict, BoundError> {
    connected(rep)?;
    if rep.alg_conn <= 0.0 {
        return Err(BoundError::NonPositiveConnectivity(rep.alg_conn));
    }
    let d = rep.diameter.ok_or(BoundError::Disconnected)? as f64;
    Ok(verdict(
        PredicateId::Lemma2,
        Sense::AtLeast,
        d,
        4.0 / (rep.n as f64 * rep.alg_conn),
        true,
    ))
}

/// Lower and upper bounds on `R/δ`, in that order.
pub fn lemma5_bounds(rep: &InvariantReport) -> Result<(BoundVerdict, BoundVerdict), BoundError> {
    connected(rep)?;
    if rep.n < 3 {
        return Err(BoundError::OrderTooSmall(rep.n));
    }
    if rep.min_degree == 0 {
        return Err(BoundError::ZeroMinDegree);
    }
    let n = rep.n as f64;
    let ratio = rep.randic / rep.min_degree as f64;
    let lower = verdict(PredicateId::Lemma5Lower, Sense::AtLeast, ratio, n / (2.0 * (n - 1.0)), true);
    let upper_rhs = (3.0 * n - 7.0 + 6f64.sqrt() + 3.0 * SQRT_2) / 6.0;
    let upper = verdict(PredicateId::Lemma5Upper, Sense::AtMost, ratio, upper_rhs, true);
    Ok((lower, upper))
}

pub fn theorem1_kappa1(rep: &InvariantReport) -> Result<BoundVerdict, BoundError> {
    let lhs = ratio_r_over_a(rep)?;
    let rhs = (rep.n as f64 / 2.0) / path_algebraic_connectivity(rep.n);
    Ok(verdict(PredicateId::Theorem1Kappa1, Sense::AtMost, lhs, rhs, rep.edge_conn == 1))
}

/// `(D <= 2(n-3+2√2)/π², δ >= n/2)`.
pub fn theorem2_hypotheses(rep: &InvariantReport) -> Result<(bool, bool), BoundError> {
    connected(rep)?;
    let n = rep.n as f64;
    let d = rep.diameter.ok_or(BoundError::Disconnected)? as f64;
    let diameter_cond = d <= 2.0 * (n - 3.0 + 2.0 * SQRT_2) / (PI * PI);
    let degree_cond = 2 * rep.min_degree >= rep.n;
    Ok((diameter_cond, degree_cond))
}

/// The conjecture inequality, applicable only under either hypothesis.
pub fn theorem2(rep: &InvariantReport) -> Result<BoundVerdict, BoundError> {
    let (by_diameter, by_degree) = theorem2_hypotheses(rep)?;
    let lhs = ratio_r_over_a(rep)?;
    Ok(verdict(
        PredicateId::Theorem2,
        Sense::AtMost,
        lhs,
        conjecture1_bound(rep.n)?,
        by_diameter || by_degree,
    ))
}

/// Diameter-based and degree-based lower bounds on `R·a`, in that order.
pub fn theorem3_products(rep: &InvariantReport) -> Result<(BoundVerdict, BoundVerdict), BoundError> {
    connected(rep)?;
    if rep.n < 3 {
        return Err(BoundError::OrderTooSmall(rep.n));
    }
    let n = rep.n as f64;
    let d = rep.diameter.ok_or(BoundError::Disconnected)?;
    let product = rep.randic * rep.alg_conn;
    let mut by_diameter = verdict(
        PredicateId::Theorem3Diameter,
        Sense::AtLeast,
        product,
        8.0 * (n - 1.0).sqrt() / (n * (d * d) as f64),
        true,
    );
    by_diameter.diameter_one = d == 1;
    let delta = rep.min_degree as f64;
    let by_degree = verdict(
        PredicateId::Theorem3Degree,
        Sense::AtLeast,
        product,
        n * delta * (2.0 * delta - n + 2.0) / (2.0 * (n - 1.0)),
        true,
    );
    Ok((by_diameter, by_degree))
}

/// Evaluates one predicate by id.
pub fn evaluate(predicate: PredicateId, rep: &InvariantReport) -> Result<BoundVerdict, BoundError> {
    match predicate {
        PredicateId::Conjecture1 => check_conjecture1(rep),
        PredicateId::Lemma1Kappa => lemma1_bounds(rep).map(|v| v.0),
        PredicateId::Lemma1Degree => lemma1_bounds(rep).map(|v| v.1),
        PredicateId::Lemma2 => lemma2_bound(rep),
        PredicateId::Lemma5Lower => lemma5_bounds(rep).map(|v| v.0),
        PredicateId::Lemma5Upper => lemma5_bounds(rep).map(|v| v.1),
        PredicateId::Theorem1Kappa1 => theorem1_kappa1(rep),
        PredicateId::Theorem2 => theorem2(rep),
        PredicateId::Theorem3Diameter => theorem3_products(rep).map(|v| v.0),
        PredicateId::Theorem3Degree => theorem3_products(rep).map(|v| v.1),
    }
}

/// Best member of the path / double-comet families for `R·a`.
#[derive(Debug, Clone)]
pub struct FamilyMinimizer {
    pub kind: FamilyKind,
    pub graph: Graph,
    pub product: f64,
    /// `(kind, R·a)` for the path and every valid double comet.
    pub candidates: Vec<(FamilyKind, f64)>,
}

/// Evaluates `R·a` for `P_n` and every `double_comet(n, s)` and returns the
/// smallest. Ties (within 1e-12) keep the earlier candidate, path first.
pub fn conjecture2_reference(n: usize) -> Result<FamilyMinimizer, BoundError> {
    if n < 3 {
        return Err(BoundError::OrderTooSmall(n));
    }
    let kinds = std::iter::once(FamilyKind::Path { n })
        .chain(double_comet_range(n).map(|s| FamilyKind::DoubleComet { n, s }));
    let mut best: Option<(FamilyKind, Graph, f64)> = None;
    let mut candidates = Vec::new();
    for kind in kinds {
        let g = family(kind).expect("parameters come from the valid range");
        let rep = invariant_report(&g)?;
        let product = rep.randic * rep.alg_conn;
        candidates.push((kind, product));
        if best.as_ref().is_none_or(|b| product < b.2 - 1e-12) {
            best = Some((kind, g, product));
        }
    }
    let (kind, graph, product) = best.expect("path is always a candidate");
    Ok(FamilyMinimizer { kind, graph, product, candidates })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(kind: FamilyKind) -> InvariantReport {
        invariant_report(&family(kind).unwrap()).unwrap()
    }

    fn k(n: usize) -> InvariantReport {
        report(FamilyKind::Complete { n })
    }

    #[test]
    fn predicate_ids_roundtrip() {
        for p in PredicateId::ALL {
            assert_eq!(p.as_str().parse::<PredicateId>().unwrap(), p);
        }
        assert!("lemma9".parse::<PredicateId>().is_err());
    }

    #[test]
    fn conjecture1_bound_values() {
        assert!((conjecture1_bound(3).unwrap() - SQRT_2).abs() < 1e-12);
        // (5-3+2√2)/2 = 2.41421356..., 2(1-cos 36°) = 0.38196601...
        let want = 2.414213562373095 / 0.3819660112501051;
        assert!((conjecture1_bound(5).unwrap() - want).abs() < 1e-9);
        assert!((conjecture1_bound(5).unwrap() - 6.3205).abs() < 1e-4);
        assert_eq!(conjecture1_bound(2), Err(BoundError::OrderTooSmall(2)));
    }

    #[test]
    fn conjecture1_examples() {
        let p7 = check_conjecture1(&report(FamilyKind::Path { n: 7 })).unwrap();
        assert_eq!(p7.status, Status::HoldsEquality);
        let k4 = check_conjecture1(&k(4)).unwrap();
        assert_eq!(k4.status, Status::HoldsStrict);
        assert!((k4.lhs - 0.5).abs() < 1e-9);
        let c5 = check_conjecture1(&report(FamilyKind::Cycle { n: 5 })).unwrap();
        assert_eq!(c5.status, Status::HoldsStrict);
        let want = 2.5 / (2.0 * (1.0 - (2.0 * PI / 5.0).cos()));
        assert!((c5.lhs - want).abs() < 1e-9);
    }

    #[test]
    fn conjecture1_rejects_disconnected() {
        let rep = invariant_report(&Graph::empty(4).unwrap()).unwrap();
        assert_eq!(check_conjecture1(&rep), Err(BoundError::Disconnected));
    }

    #[test]
    fn lemma1_examples() {
        let (_, degree) = lemma1_bounds(&k(4)).unwrap();
        assert_eq!(degree.status, Status::HoldsEquality);
        assert!((degree.rhs - 4.0).abs() < 1e-12);

        let (kappa, _) = lemma1_bounds(&report(FamilyKind::Path { n: 6 })).unwrap();
        assert_eq!(kappa.status, Status::HoldsEquality);

        // a(C_5) = 2(1-cos 72°) ≈ 1.381966; 2κ′(1-cos 36°) ≈ 0.763932
        let (kappa, _) = lemma1_bounds(&report(FamilyKind::Cycle { n: 5 })).unwrap();
        assert!((kappa.lhs - 1.381966011250105).abs() < 1e-9);
        assert!((kappa.rhs - 0.7639320225002102).abs() < 1e-12);
        assert_eq!(kappa.status, Status::HoldsStrict);
    }

    #[test]
    fn lemma2_examples() {
        let p4 = lemma2_bound(&report(FamilyKind::Path { n: 4 })).unwrap();
        assert_eq!(p4.status, Status::HoldsStrict);
        assert!((p4.rhs - 4.0 / (4.0 * 0.5857864376269049)).abs() < 1e-9);
        assert!((p4.rhs - 1.7071).abs() < 1e-4);
        // K_2 meets the bound exactly: D = 1 = 4/(2·2)
        assert_eq!(lemma2_bound(&k(2)).unwrap().status, Status::HoldsEquality);
        for n in 3..=12 {
            assert_eq!(lemma2_bound(&k(n)).unwrap().status, Status::HoldsStrict);
        }
        let c4 = lemma2_bound(&report(FamilyKind::Cycle { n: 4 })).unwrap();
        assert!((c4.rhs - 0.5).abs() < 1e-9);
        assert_eq!(c4.status, Status::HoldsStrict);
    }

    #[test]
    fn lemma5_examples() {
        for n in 3..=10 {
            let (lower, _) = lemma5_bounds(&k(n)).unwrap();
            assert_eq!(lower.status, Status::HoldsEquality);
        }
        let (_, upper) = lemma5_bounds(&report(FamilyKind::Star { n: 5 })).unwrap();
        assert!((upper.lhs - 2.0).abs() < 1e-12);
        assert!((upper.rhs - 2.448688).abs() < 1e-6);
        assert_eq!(upper.status, Status::HoldsStrict);
        let (lower, upper) = lemma5_bounds(&report(FamilyKind::Path { n: 4 })).unwrap();
        assert!((lower.rhs - 4.0 / 6.0).abs() < 1e-12);
        assert_eq!((lower.status, upper.status), (Status::HoldsStrict, Status::HoldsStrict));
    }

    #[test]
    fn theorem2_examples() {
        assert_eq!(theorem2_hypotheses(&k(10)).unwrap(), (true, true));
        let p10 = report(FamilyKind::Path { n: 10 });
        assert_eq!(theorem2_hypotheses(&p10).unwrap(), (false, false));
        assert_eq!(theorem2(&p10).unwrap().status, Status::NotApplicable);
        let c8 = report(FamilyKind::Cycle { n: 8 });
        assert!(!theorem2_hypotheses(&c8).unwrap().1);
        // 2(7+2√2)/π² ≈ 1.99166
        let bound = 2.0 * (7.0 + 2.0 * SQRT_2) / (PI * PI);
        assert!((bound - 1.99166).abs() < 1e-5);
    }

    #[test]
    fn theorem3_examples() {
        let (by_d, _) = theorem3_products(&k(4)).unwrap();
        assert!(by_d.diameter_one);
        assert!((by_d.lhs - 8.0).abs() < 1e-9);
        assert!((by_d.rhs - 8.0 * 3f64.sqrt() / 4.0).abs() < 1e-12);
        assert_eq!(by_d.status, Status::HoldsStrict);

        let (by_d, by_delta) = theorem3_products(&report(FamilyKind::Path { n: 5 })).unwrap();
        assert!(!by_d.diameter_one);
        assert!((by_d.rhs - 0.2).abs() < 1e-12);
        assert!((by_d.lhs - 0.9222).abs() < 1e-4);
        assert_eq!(by_d.status, Status::HoldsStrict);
        // δ = 1 <= (n-2)/2: nonpositive right-hand side
        assert!(by_delta.rhs <= 0.0);
        assert_eq!(by_delta.status, Status::HoldsStrict);
    }

    #[test]
    fn theorem1_kappa1_hypothesis() {
        let p6 = theorem1_kappa1(&report(FamilyKind::Path { n: 6 })).unwrap();
        assert!(p6.hypothesis_met);
        assert_eq!(p6.status, Status::HoldsStrict);
        let c6 = theorem1_kappa1(&report(FamilyKind::Cycle { n: 6 })).unwrap();
        assert_eq!(c6.status, Status::NotApplicable);
    }

    #[test]
    fn grading() {
        assert_eq!(grade(1e-6, true), Status::HoldsEquality);
        assert_eq!(grade(-1e-6, true), Status::HoldsEquality);
        assert_eq!(grade(1.1e-6, true), Status::HoldsStrict);
        assert_eq!(grade(-1.1e-6, true), Status::Violated);
        assert_eq!(grade(-5.0, false), Status::NotApplicable);
    }

    #[test]
    fn conjecture2_small_orders() {
        let r3 = conjecture2_reference(3).unwrap();
        assert_eq!(r3.kind, FamilyKind::Path { n: 3 });
        assert_eq!(r3.candidates.len(), 1);
        let r9 = conjecture2_reference(9).unwrap();
        assert_eq!(r9.kind, FamilyKind::Path { n: 9 });
        // s = 1 is the path itself under another labeling
        let r10 = conjecture2_reference(10).unwrap();
        assert_eq!(r10.candidates.len(), 5);
        assert!((r10.candidates[0].1 - r10.candidates[1].1).abs() < 1e-12);
    }

    #[test]
    fn conjecture2_crossover() {
        // Path products stay below every double comet up to n = 13; the
        // first double comet to win is s = 2 at n = 14.
        for n in 10..=13 {
            let r = conjecture2_reference(n).unwrap();
            assert_eq!(r.kind, FamilyKind::Path { n });
            let path = path_randic(n) * path_algebraic_connectivity(n);
            assert!((r.product - path).abs() < 1e-9);
        }
        let r14 = conjecture2_reference(14).unwrap();
        assert_eq!(r14.kind, FamilyKind::DoubleComet { n: 14, s: 2 });
        assert!((r14.product - 0.345777722).abs() < 1e-8);
        assert!(r14.product < path_randic(14) * path_algebraic_connectivity(14));
    }
}
