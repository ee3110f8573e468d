//! Isomorph-free streams of connected graphs and trees.
//!
//! Every connected graph on `n` vertices has a vertex whose deletion leaves
//! it connected, so joining a new vertex to every nonempty neighbour subset
//! of every connected `(n-1)`-vertex graph reaches all classes. Children are
//! deduplicated by canonical key and emitted in certificate order as their
//! canonical representatives.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_key, graph_from_key};
use crate::graph::Graph;

pub const MAX_CONNECTED_ORDER: usize = 9;
pub const MAX_TREE_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("{kind} enumeration supports 1 <= n <= {cap}, got {n}")]
    OutOfRange { kind: StreamKind, n: usize, cap: usize },
    #[error("unknown stream kind {0:?}")]
    UnknownKind(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StreamKind {
    Connected,
    Trees,
}

impl StreamKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            StreamKind::Connected => "connected",
            StreamKind::Trees => "trees",
        }
    }

    pub fn cap(&self) -> usize {
        match self {
            StreamKind::Connected => MAX_CONNECTED_ORDER,
            StreamKind::Trees => MAX_TREE_ORDER,
        }
    }

    pub fn generate(&self, n: usize) -> Result<Vec<Graph>, EnumerationError> {
        match self {
            StreamKind::Connected => connected_graphs(n),
            StreamKind::Trees => trees(n),
        }
    }
}

impl fmt::Display for StreamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StreamKind {
    type Err = EnumerationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "connected" => Ok(StreamKind::Connected),
            "trees" => Ok(StreamKind::Trees),
            _ => Err(EnumerationError::UnknownKind(s.to_owned())),
        }
    }
}

fn check(kind: StreamKind, n: usize) -> Result<(), EnumerationError> {
    if (1..=kind.cap()).contains(&n) {
        Ok(())
    } else {
        Err(EnumerationError::OutOfRange { kind, n, cap: kind.cap() })
    }
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, sorted by certificate.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    check(StreamKind::Connected, n)?;
    Ok(grow(n, |parent| (1..1u64 << parent.order()).collect()))
}

/// One representative per isomorphism class of trees on `n` vertices,
/// sorted by certificate.
///
/// Same augmentation as [`connected_graphs`], restricted to tree parents and
/// single-neighbour extensions; this yields exactly the `m = n - 1` members
/// of the connected stream, because deleting a leaf of a tree leaves a tree.
pub fn trees(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    check(StreamKind::Trees, n)?;
    Ok(grow(n, |parent| (0..parent.order()).map(|v| 1u64 << v).collect()))
}

fn grow<F>(n: usize, extensions: F) -> Vec<Graph>
where
    F: Fn(&Graph) -> Vec<u64> + Sync,
{
    let mut level = vec![Graph::empty(1).expect("order 1 is valid")];
    for k in 2..=n {
        let keys: HashSet<u128> = level
            .par_iter()
            .fold(HashSet::new, |mut seen, parent| {
                for mask in extensions(parent) {
                    let child = parent.extended(mask).expect("order within cap");
                    seen.insert(canonical_key(&child).expect("order within cap"));
                }
                seen
            })
            .reduce(HashSet::new, |a, b| if a.len() >= b.len() { merge(a, b) } else { merge(b, a) });
        let mut sorted: Vec<u128> = keys.into_iter().collect();
        sorted.sort_unstable();
        level = sorted.into_iter().map(|key| graph_from_key(k, key)).collect();
    }
    level
}

fn merge(mut big: HashSet<u128>, small: HashSet<u128>) -> HashSet<u128> {
    big.extend(small);
    big
}
