//! Output helpers shared by every command: 12-significant-digit reals and
//! row serialisation.

use randic_core::{to_graph6_string, Graph, InvariantReport};
use serde::Serialize;

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds to 12 significant digits. The result's shortest round-trip
/// representation is what both CSV and JSON print.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses")
}

/// The rounded value spelled exactly as serde_json spells it.
pub fn fmt_real(x: f64) -> String {
    serde_json::to_string(&round_sig(x)).expect("finite reals serialize")
}

pub fn fmt_opt_real(x: Option<f64>) -> String {
    x.map_or_else(|| "NA".to_owned(), fmt_real)
}

/// One graph's invariants as written by `invariants`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub randic: f64,
    pub alg_conn: f64,
    /// `null` / `NA` for disconnected graphs.
    pub diameter: Option<u32>,
    pub min_degree: usize,
    pub edge_conn: usize,
    pub degrees: Vec<usize>,
    pub is_regular: bool,
    pub is_tree: bool,
    pub is_connected: bool,
}

impl InvariantRow {
    pub const CSV_HEADER: &'static str =
        "graph6,n,m,randic,alg_conn,diameter,min_degree,edge_conn,degrees,is_regular,is_tree,is_connected";

    pub fn new(g: &Graph, rep: &InvariantReport) -> Self {
        InvariantRow {
            graph6: to_graph6_string(g),
            n: rep.n,
            m: rep.m,
            randic: round_sig(rep.randic),
            alg_conn: round_sig(rep.alg_conn),
            diameter: rep.diameter,
            min_degree: rep.min_degree,
            edge_conn: rep.edge_conn,
            degrees: rep.degrees.clone(),
            is_regular: rep.is_regular,
            is_tree: rep.is_tree,
            is_connected: rep.is_connected,
        }
    }

    pub fn to_csv(&self) -> String {
        let degrees: Vec<String> = self.degrees.iter().map(usize::to_string).collect();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.graph6,
            self.n,
            self.m,
            fmt_real(self.randic),
            fmt_real(self.alg_conn),
            self.diameter.map_or_else(|| "NA".to_owned(), |d| d.to_string()),
            self.min_degree,
            self.edge_conn,
            degrees.join(";"),
            self.is_regular,
            self.is_tree,
            self.is_connected,
        )
    }

    /// Parses a line produced by [`InvariantRow::to_csv`].
    pub fn from_csv(line: &str) -> Option<Self> {
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 12 {
            return None;
        }
        Some(InvariantRow {
            graph6: f[0].to_owned(),
            n: f[1].parse().ok()?,
            m: f[2].parse().ok()?,
            randic: f[3].parse().ok()?,
            alg_conn: f[4].parse().ok()?,
            diameter: if f[5] == "NA" { None } else { Some(f[5].parse().ok()?) },
            min_degree: f[6].parse().ok()?,
            edge_conn: f[7].parse().ok()?,
            degrees: if f[8].is_empty() {
                Vec::new()
            } else {
                f[8].split(';').map(|d| d.parse().ok()).collect::<Option<_>>()?
            },
            is_regular: f[9].parse().ok()?,
            is_tree: f[10].parse().ok()?,
            is_connected: f[11].parse().ok()?,
        })
    }
}
