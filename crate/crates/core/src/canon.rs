//! Canonical labeling by partition refinement and individualization.
//!
//! The canonical form of a graph is the relabeling whose graph6 encoding is
//! lexicographically smallest among the leaves of the refinement search tree.
//! Refinement only ever orders vertices by isomorphism-invariant signatures,
//! so the set of leaves (and hence the minimum) does not depend on the input
//! labeling.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{BitIter, Graph};
use crate::graph6::{decode_graph6, encode_graph6};

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANON_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("canonical labeling supports n <= {MAX_CANON_ORDER}, got {0}")]
    TooLarge(usize),
}

/// graph6 bytes of the canonically relabeled graph. Equal certificates
/// mean isomorphic graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate {
    pub bytes: Vec<u8>,
}

impl Certificate {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.bytes).expect("graph6 is ASCII")
    }

    /// The canonical representative.
    pub fn graph(&self) -> Graph {
        decode_graph6(&self.bytes).expect("certificates are valid graph6")
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Certificate({})", self.as_str())
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

pub fn canonical_form(g: &Graph) -> Result<Certificate, CanonError> {
    let graph = canonical_graph(g)?;
    Ok(Certificate { bytes: encode_graph6(&graph) })
}

/// The canonical relabeling of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph, CanonError> {
    let labels = canonical_labeling(g)?;
    Ok(g.permuted(&labels))
}

/// Canonical upper-triangle bits; numeric order equals graph6 byte order
/// among graphs of the same order.
pub(crate) fn canonical_key(g: &Graph) -> Result<u128, CanonError> {
    best_leaf(g).map(|(key, _)| key)
}

/// Inverse of [`canonical_key`]'s bit layout.
pub(crate) fn graph_from_key(n: usize, key: u128) -> Graph {
    let mut g = Graph::empty(n).expect("order within canonical cap");
    let mut bit = n * (n - 1) / 2;
    for v in 1..n {
        for u in 0..v {
            bit -= 1;
            if key >> bit & 1 == 1 {
                g.insert_edge(u, v);
            }
        }
    }
    g
}

fn best_leaf(g: &Graph) -> Result<(u128, Vec<usize>), CanonError> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(CanonError::TooLarge(n));
    }
    let mut search = Search { g, best: None };
    let mut start = Partition::unit(n);
    start.refine(g);
    search.descend(start);
    Ok(search.best.expect("search visits at least one leaf"))
}

/// `labels[v]` is the canonical label of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>, CanonError> {
    let (_, order) = best_leaf(g)?;
    let n = g.order();
    let mut labels = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        labels[v] = pos;
    }
    Ok(labels)
}

/// Upper-triangle bits of `g` relabeled so position `i` holds `order[i]`,
/// in graph6 order with the first bit most significant.
fn leaf_key(g: &Graph, order: &[usize]) -> u128 {
    let mut key = 0u128;
    for v in 1..order.len() {
        let row = g.row(order[v]);
        for &u in &order[..v] {
            key = key << 1 | (row >> u & 1) as u128;
        }
    }
    key
}

/// Ordered partition of the vertex set: `order` lists the vertices, and
/// `cell_start[i]` marks the first position of each cell.
#[derive(Clone)]
struct Partition {
    order: Vec<usize>,
    cell_start: Vec<bool>,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut cell_start = vec![false; n];
        cell_start[0] = true;
        Partition { order: (0..n).collect(), cell_start }
    }

    fn cells(&self) -> Vec<(usize, usize)> {
        let n = self.order.len();
        let mut cells = Vec::with_capacity(n);
        let mut begin = 0;
        for i in 1..=n {
            if i == n || self.cell_start[i] {
                cells.push((begin, i));
                begin = i;
            }
        }
        cells
    }

    fn is_discrete(&self) -> bool {
        self.cell_start.iter().all(|&b| b)
    }

    /// Splits cells by neighbour counts into every current cell until the
    /// partition is equitable.
    fn refine(&mut self, g: &Graph) {
        loop {
            let cells = self.cells();
            let masks: Vec<u64> = cells
                .iter()
                .map(|&(b, e)| self.order[b..e].iter().fold(0u64, |m, &v| m | 1 << v))
                .collect();
            // counts are < 16 and there are at most 12 cells: 4 bits each
            let signature = |v: usize| -> u64 {
                let row = g.row(v);
                masks
                    .iter()
                    .fold(0u64, |sig, &m| sig << 4 | (row & m).count_ones() as u64)
            };
            let mut changed = false;
            for &(b, e) in &cells {
                if e - b == 1 {
                    continue;
                }
                let mut keyed: Vec<(u64, usize)> =
                    self.order[b..e].iter().map(|&v| (signature(v), v)).collect();
                keyed.sort_unstable();
                for (i, &(_, v)) in keyed.iter().enumerate() {
                    self.order[b + i] = v;
                    if i > 0 && keyed[i - 1].0 != keyed[i].0 {
                        self.cell_start[b + i] = true;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }

    /// Moves `v` (inside the cell `[b, e)`) to the front of that cell as a
    /// singleton.
    fn individualize(&self, b: usize, v: usize) -> Self {
        let mut next = self.clone();
        let pos = next.order.iter().position(|&x| x == v).expect("vertex in partition");
        next.order.swap(b, pos);
        next.cell_start[b + 1] = true;
        next
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, p: Partition) {
        if p.is_discrete() {
            let key = leaf_key(self.g, &p.order);
            if self.best.as_ref().is_none_or(|(k, _)| key < *k) {
                self.best = Some((key, p.order));
            }
            return;
        }
        let (b, e) = p
            .cells()
            .into_iter()
            .find(|&(b, e)| e - b > 1)
            .expect("non-discrete partition has a non-singleton cell");
        // Twins in the target cell are swapped by an automorphism that fixes
        // the current partition, so their subtrees yield the same leaves.
        let mut tried = 0u64;
        for i in b..e {
            let v = p.order[i];
            let twin_seen = BitIter(tried).any(|u| are_twins(self.g, u, v));
            if twin_seen {
                continue;
            }
            tried |= 1 << v;
            let mut child = p.individualize(b, v);
            child.refine(self.g);
            self.descend(child);
        }
    }
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let strip = !(1u64 << u | 1u64 << v);
    g.row(u) & strip == g.row(v) & strip
}
