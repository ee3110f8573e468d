//! Edge connectivity through unit-capacity max-flow.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Max-flow from `source` to `sink` where every undirected edge is a pair of
/// opposite unit-capacity arcs. Augmentation stops once `limit` is reached.
pub fn max_flow(g: &Graph, source: usize, sink: usize, limit: usize) -> usize {
    let n = g.order();
    assert!(source < n && sink < n && source != sink);
    let mut residual = vec![0i32; n * n];
    for (u, v) in g.edges() {
        residual[u * n + v] = 1;
        residual[v * n + u] = 1;
    }

    let mut flow = 0;
    let mut parent = vec![usize::MAX; n];
    while flow < limit {
        parent.fill(usize::MAX);
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        'bfs: while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if parent[v] == usize::MAX && residual[u * n + v] > 0 {
                    parent[v] = u;
                    if v == sink {
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        let mut v = sink;
        while v != source {
            let u = parent[v];
            residual[u * n + v] -= 1;
            residual[v * n + u] += 1;
            v = u;
        }
        flow += 1;
    }
    flow
}

/// Minimum number of edges whose removal disconnects `g`.
///
/// Computed as the minimum over `v != 0` of the max-flow from vertex 0 to
/// `v`. Returns 0 for disconnected graphs and for a single vertex.
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n < 2 || !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree();
    for v in 1..n {
        best = best.min(max_flow(g, 0, v, best));
        if best == 1 {
            break;
        }
    }
    best
}
