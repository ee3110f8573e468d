//! Brute-force reference implementations, deliberately independent of the
//! crate's algorithms.

#![allow(dead_code)]

use randic_core::{encode_graph6, Graph};

/// Unordered vertex pairs of `0..n` in a fixed order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 1..n {
        for u in 0..v {
            out.push((u, v));
        }
    }
    out
}

pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> =
        pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Every labeled graph on `n` vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let p = pairs(n);
    (0..1u64 << p.len()).map(move |mask| graph_from_mask(n, &p, mask))
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Connectivity by repeated neighbourhood closure on an adjacency matrix.
pub fn connected_by_closure(n: usize, adj: &[Vec<bool>]) -> bool {
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    loop {
        let mut grew = false;
        for u in 0..n {
            for v in 0..n {
                if seen[u] && adj[u][v] && !seen[v] {
                    seen[v] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            return seen.iter().all(|&s| s);
        }
    }
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

/// Isomorphism classes of connected graphs and of trees on `n` vertices,
/// counted by marking whole orbits of labeled graphs under all `n!`
/// relabelings.
pub fn labeled_filter_counts(n: usize) -> (usize, usize) {
    let p = pairs(n);
    let index = |u: usize, v: usize| p.iter().position(|&e| e == (u.min(v), u.max(v))).unwrap();
    let maps: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|perm| p.iter().map(|&(u, v)| index(perm[u], perm[v])).collect())
        .collect();
    let total = 1usize << p.len();
    let mut seen = vec![false; total];
    let (mut connected, mut trees) = (0, 0);
    for mask in 0..total {
        if seen[mask] {
            continue;
        }
        for map in &maps {
            let mut image = 0usize;
            for (i, &j) in map.iter().enumerate() {
                image |= (mask >> i & 1) << j;
            }
            seen[image] = true;
        }
        let g = graph_from_mask(n, &p, mask as u64);
        if connected_by_closure(n, &adjacency(&g)) {
            connected += 1;
            if mask.count_ones() as usize + 1 == n {
                trees += 1;
            }
        }
    }
    (connected, trees)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Number of unlabeled graphs on `n` vertices by Burnside's lemma over the
/// cycle types of the symmetric group acting on vertex pairs.
pub fn burnside_graph_count(n: usize) -> u128 {
    let factorial = |k: usize| (1..=k as u128).product::<u128>();
    let mut sum = 0u128;
    for cycles in partitions(n, n) {
        // permutations of this cycle type: n! / prod(k^m_k * m_k!)
        let mut denom = 1u128;
        for k in 1..=n {
            let m = cycles.iter().filter(|&&c| c == k).count();
            denom *= (k as u128).pow(m as u32) * factorial(m);
        }
        let mut pair_cycles = 0;
        for (i, &a) in cycles.iter().enumerate() {
            pair_cycles += a / 2;
            for &b in &cycles[i + 1..] {
                pair_cycles += gcd(a, b);
            }
        }
        sum += factorial(n) / denom * (1u128 << pair_cycles);
    }
    sum / factorial(n)
}

fn mobius(mut n: usize) -> i128 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Connected counts `c_1..=c_max` from all-graph counts by the inverse
/// Euler transform.
pub fn connected_counts_from_totals(max: usize) -> Vec<u128> {
    let a: Vec<i128> = (0..=max).map(|n| if n == 0 { 1 } else { burnside_graph_count(n) as i128 }).collect();
    let mut d = vec![0i128; max + 1];
    for n in 1..=max {
        let mut s = n as i128 * a[n];
        for k in 1..n {
            s -= d[k] * a[n - k];
        }
        d[n] = s;
    }
    (1..=max)
        .map(|n| {
            let s: i128 = (1..=n).filter(|j| n % j == 0).map(|j| mobius(n / j) * d[j]).sum();
            (s / n as i128) as u128
        })
        .collect()
}

/// Unlabeled tree counts `t_1..=t_max` from rooted-tree counts.
pub fn otter_tree_counts(max: usize) -> Vec<u128> {
    let mut r = vec![0u128; max + 1];
    r[1] = 1;
    for n in 1..max {
        let mut s = 0u128;
        for k in 1..=n {
            let inner: u128 = (1..=k).filter(|d| k % d == 0).map(|d| d as u128 * r[d]).sum();
            s += inner * r[n - k + 1];
        }
        r[n + 1] = s / n as u128;
    }
    (1..=max)
        .map(|n| {
            let pairs: u128 = (1..n).map(|i| r[i] * r[n - i]).sum();
            let half = if n % 2 == 0 { r[n / 2] } else { 0 };
            r[n] - (pairs - half) / 2
        })
        .collect()
}

/// Smallest number of edges leaving a nonempty proper vertex subset.
pub fn brute_min_cut(g: &Graph) -> usize {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (1..(1u64 << n) - 1)
        .map(|s| edges.iter().filter(|&&(u, v)| (s >> u & 1) != (s >> v & 1)).count())
        .min()
        .unwrap_or(0)
}

/// Lexicographically smallest graph6 over every relabeling.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> Vec<u8> {
    perms.iter().map(|p| encode_graph6(&g.permuted(p))).min().unwrap()
}

/// All-pairs distances by Floyd-Warshall; `None` if disconnected.
pub fn floyd_diameter(g: &Graph) -> Option<u32> {
    let n = g.order();
    let inf = u32::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let max = d.iter().flatten().copied().max().unwrap_or(0);
    (max < inf).then_some(max)
}

/// Randić index summed over ordered adjacent pairs and halved.
pub fn randic_by_matrix(g: &Graph) -> f64 {
    let n = g.order();
    let deg: Vec<f64> = (0..n).map(|u| (0..n).filter(|&v| g.has_edge(u, v)).count() as f64).collect();
    let mut s = 0.0;
    for u in 0..n {
        for v in 0..n {
            if g.has_edge(u, v) {
                s += 1.0 / (deg[u] * deg[v]).sqrt();
            }
        }
    }
    s / 2.0
}
