//! Randić index, diameter, and the aggregated per-graph invariant report.

use serde::Serialize;
use thiserror::Error;

use crate::flow::edge_connectivity;
use crate::graph::{Graph, UNREACHABLE};
use crate::spectrum::{laplacian_spectrum, SpectrumError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InvariantError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

/// Sum of `1/sqrt(d(u) d(v))` over the edges, in lexicographic edge order.
pub fn randic_index(g: &Graph) -> f64 {
    g.edges()
        .map(|(u, v)| 1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt())
        .sum()
}

/// Randić index of an edge list on `n` vertices; summed in the order given.
pub fn randic_index_of_edges(n: usize, edges: &[(usize, usize)]) -> f64 {
    let mut deg = vec![0usize; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    edges
        .iter()
        .map(|&(u, v)| 1.0 / ((deg[u] * deg[v]) as f64).sqrt())
        .sum()
}

/// Largest hop distance between two vertices.
pub fn diameter(g: &Graph) -> Result<u32, InvariantError> {
    let mut best = 0;
    for s in 0..g.order() {
        for d in g.bfs_distances(s) {
            if d == UNREACHABLE {
                return Err(InvariantError::Disconnected);
            }
            best = best.max(d);
        }
    }
    Ok(best)
}

/// Every invariant the bounds refer to, for one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    /// Randić index `R`.
    pub randic: f64,
    /// Algebraic connectivity `a`; exactly 0 for disconnected graphs.
    pub alg_conn: f64,
    /// `None` when disconnected.
    pub diameter: Option<u32>,
    pub min_degree: usize,
    /// Edge connectivity `κ′`; 0 when disconnected.
    pub edge_conn: usize,
    pub degrees: Vec<usize>,
    pub is_regular: bool,
    pub is_tree: bool,
    pub is_connected: bool,
}

pub fn invariant_report(g: &Graph) -> Result<InvariantReport, InvariantError> {
    let degrees = g.degrees();
    let connected = g.is_connected();
    let spectrum = laplacian_spectrum(g)?;
    let m = g.edge_count();
    Ok(InvariantReport {
        n: g.order(),
        m,
        randic: randic_index(g),
        alg_conn: if connected { spectrum.second_smallest() } else { 0.0 },
        diameter: diameter(g).ok(),
        min_degree: degrees.iter().copied().min().unwrap_or(0),
        edge_conn: edge_connectivity(g),
        is_regular: degrees.windows(2).all(|w| w[0] == w[1]),
        is_tree: connected && m + 1 == g.order(),
        is_connected: connected,
        degrees,
    })
}
