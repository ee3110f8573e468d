//! Undirected simple graphs stored as one adjacency bit row per vertex.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Largest order a [`Graph`] may have (one-byte graph6 size form).
pub const MAX_ORDER: usize = 62;

/// Distance reported by [`Graph::bfs_distances`] for vertices that cannot be reached.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} outside [1, {MAX_ORDER}]")]
    OrderOutOfRange(usize),
    #[error("edge ({u}, {v}) has an endpoint outside [0, {n})")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid {kind} parameters: {reason}")]
    InvalidFamily { kind: &'static str, reason: String },
}

/// A simple undirected graph on vertices `0..n`.
///
/// Row `u` holds bit `v` iff `uv` is an edge. Rows are kept symmetric with a
/// clear diagonal; every constructor enforces this.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if !(1..=MAX_ORDER).contains(&n) {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let full = low_mask(n);
        for u in 0..n {
            g.rows[u] = full & !(1u64 << u);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    /// Neighbourhood of `u` as a bit row.
    #[inline]
    pub fn row(&self, u: usize) -> u64 {
        self.rows[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> {
        BitIter(self.rows[u])
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            BitIter(self.rows[u] & !low_mask(u + 1)).map(move |v| (u, v))
        })
    }

    /// Copy of this graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.insert_edge(u, v);
        g
    }

    /// Copy of this graph with the edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    /// Relabels vertices: old vertex `u` becomes `perm[u]`.
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut seen = 0u64;
        for &p in perm {
            assert!(p < self.n && seen >> p & 1 == 0, "not a permutation");
            seen |= 1 << p;
        }
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u) {
                rows[perm[u]] |= 1 << perm[v];
            }
        }
        Graph { n: self.n, rows }
    }

    /// Hop distances from `source`; unreachable vertices get [`UNREACHABLE`].
    ///
    /// Panics if `source >= n`.
    pub fn bfs_distances(&self, source: usize) -> Vec<u32> {
        assert!(source < self.n, "source {source} out of range");
        let mut dist = vec![UNREACHABLE; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if dist[v] == UNREACHABLE {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Bit set of the vertices reachable from `source`.
    pub fn component_mask(&self, source: usize) -> u64 {
        let mut seen = 1u64 << source;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for u in BitIter(frontier) {
                next |= self.rows[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_mask(0) == low_mask(self.n)
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n && self.is_connected()
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    /// Adds a new vertex `n` adjacent to the vertices in `mask`.
    pub(crate) fn extended(&self, mask: u64) -> Result<Self, GraphError> {
        let n = self.n + 1;
        if n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let mut rows = self.rows.clone();
        rows.push(mask);
        for u in BitIter(mask) {
            rows[u] |= 1 << self.n;
        }
        Ok(Graph { n, rows })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Mask with the low `k` bits set.
#[inline]
pub(crate) fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Iterates the set bit positions of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}
