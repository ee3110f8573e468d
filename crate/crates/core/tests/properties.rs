//! Structural identities on random connected graphs.

use proptest::prelude::*;
use randic_core::spectrum::laplacian_spectrum;
use randic_core::{decode_graph6, encode_graph6, invariant_report, canonical_form, Graph};

/// A random spanning tree (each vertex attaches to an earlier one) plus
/// random extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents = (1..n).map(|v| 0..v).collect::<Vec<_>>();
        let extra = prop::collection::vec((0..n, 0..n), 0..n * 2);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.into_iter().enumerate().map(|(i, p)| (p, i + 1)).collect();
            edges.extend(extra.into_iter().filter(|(u, v)| u != v));
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn laplacian_trace_and_kernel(g in connected_graph(20)) {
        let spec = laplacian_spectrum(&g).unwrap();
        let n = g.order() as f64;
        let trace: f64 = spec.eigenvalues.iter().sum();
        prop_assert!((trace - 2.0 * g.edge_count() as f64).abs() < 1e-8 * n);
        prop_assert!(spec.eigenvalues[0].abs() < 1e-8);
        prop_assert!(spec.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn randic_between_star_and_regular(g in connected_graph(16)) {
        let rep = invariant_report(&g).unwrap();
        let n = rep.n as f64;
        prop_assert!(rep.randic <= n / 2.0 + 1e-12);
        prop_assert_eq!((rep.randic - n / 2.0).abs() < 1e-9, rep.is_regular);
        prop_assert!(rep.randic >= (n - 1.0).sqrt() - 1e-12);
        let is_star = rep.m == rep.n - 1 && rep.degrees.iter().any(|&d| d == rep.n - 1);
        prop_assert_eq!((rep.randic - (n - 1.0).sqrt()).abs() < 1e-9, is_star);
    }

    #[test]
    fn algebraic_connectivity_below_edge_connectivity(g in connected_graph(16)) {
        let rep = invariant_report(&g).unwrap();
        prop_assert!(rep.alg_conn > 1e-8);
        prop_assert!(rep.edge_conn <= rep.min_degree);
        if rep.m < rep.n * (rep.n - 1) / 2 {
            prop_assert!(rep.alg_conn <= rep.edge_conn as f64 + 1e-9);
        }
    }

    #[test]
    fn reports_ignore_labels((g, perm) in connected_graph(12).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), permutation(n))
    })) {
        let h = g.permuted(&perm);
        let (a, b) = (invariant_report(&g).unwrap(), invariant_report(&h).unwrap());
        prop_assert!((a.randic - b.randic).abs() < 1e-12);
        prop_assert!((a.alg_conn - b.alg_conn).abs() < 1e-9);
        prop_assert_eq!(a.diameter, b.diameter);
        prop_assert_eq!(a.edge_conn, b.edge_conn);
        let (mut da, mut db) = (a.degrees.clone(), b.degrees.clone());
        da.sort();
        db.sort();
        prop_assert_eq!(da, db);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn graph6_roundtrip_on_large_orders(g in connected_graph(62)) {
        prop_assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
    }
}
