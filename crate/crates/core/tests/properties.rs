//! Property-based invariants for the graph constructions, the root finder,
//! and the eigensolver.

use aalpha::alpha::{alpha_matrix, AlphaParam};
use aalpha::eigen::sym_eigenvalues;
use aalpha::graph::{join, Graph, IntMatrix, JoinKind};
use aalpha::poly::{real_roots, RealPolynomial};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let len = pairs.len();
        prop::collection::vec(any::<bool>(), len..=len.max(1)).prop_map(move |mask| {
            let edges = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&e, _)| e);
            Graph::new(n, edges).expect("generated edges are valid")
        })
    })
}

/// Circulants are always regular, so they make a convenient regular-graph
/// strategy for join preconditions.
fn arb_circulant() -> impl Strategy<Value = Graph> {
    (3..=9usize).prop_flat_map(|n| {
        let max_offset = (n - 1) / 2;
        prop::collection::vec(any::<bool>(), 1..=max_offset.max(1)).prop_map(move |mask| {
            let mut offsets: Vec<usize> = mask
                .iter()
                .enumerate()
                .filter(|(_, &keep)| keep)
                .map(|(i, _)| i + 1)
                .collect();
            if offsets.is_empty() {
                offsets.push(1);
            }
            let edges = (0..n).flat_map(|v| {
                offsets
                    .iter()
                    .map(move |&o| (v, (v + o) % n))
                    .collect::<Vec<_>>()
            });
            Graph::new(n, edges).expect("circulant edges are valid")
        })
    })
}

proptest! {
    #[test]
    fn edge_list_round_trips(g in arb_graph(12)) {
        let text = g.to_edge_list();
        let back = Graph::from_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.to_edge_list(), text);
    }

    #[test]
    fn incidence_columns_sum_to_two(g in arb_graph(10)) {
        let r = g.incidence_matrix();
        for j in 0..r.cols() {
            let sum: i64 = (0..r.rows()).map(|i| r.get(i, j)).sum();
            prop_assert_eq!(sum, 2);
        }
    }

    #[test]
    fn incidence_line_graph_identity(g in arb_graph(10)) {
        // R^T R - A(L(G)) = 2 I, in integers
        let r = g.incidence_matrix();
        let lhs = r.transpose().mul(&r);
        let expected = g
            .line_graph()
            .adjacency()
            .sub(&IntMatrix::identity(g.edge_count()).scale(-2));
        prop_assert_eq!(lhs, expected);
    }

    #[test]
    fn incidence_regular_identity(g in arb_circulant()) {
        // R R^T - A = t I for t-regular graphs, in integers
        let t = g.regularity().expect("circulants are regular") as i64;
        let r = g.incidence_matrix();
        let lhs = r.mul(&r.transpose());
        let expected = g.adjacency().sub(&IntMatrix::identity(g.n()).scale(-t));
        prop_assert_eq!(lhs, expected);
    }

    #[test]
    fn derived_graph_sizes(g in arb_graph(10)) {
        let n = g.n();
        let m = g.edge_count();
        let incident_pairs = g.line_graph().edge_count();
        prop_assert_eq!(g.q_graph().n(), n + m);
        prop_assert_eq!(g.total_graph().n(), n + m);
        prop_assert_eq!(g.q_graph().edge_count(), 2 * m + incident_pairs);
        prop_assert_eq!(g.total_graph().edge_count(), 3 * m + incident_pairs);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn join_degree_blocks(g1 in arb_circulant(), g2 in arb_graph(6)) {
        let t1 = g1.regularity().unwrap();
        let (n1, m1, n2) = (g1.n(), g1.edge_count(), g2.n());
        let d2 = g2.degrees();
        for kind in JoinKind::ALL {
            let joined = join(kind, &g1, &g2).unwrap();
            prop_assert_eq!(joined.n(), n1 + m1 + n2);
            let d = joined.degrees();
            let (v_extra, i_extra) = if kind.connects_inserted() {
                (0, n2)
            } else {
                (n2, 0)
            };
            let v_base = if kind.keeps_original_edges() { 2 * t1 } else { t1 };
            for v in 0..n1 {
                prop_assert_eq!(d[v], v_base + v_extra);
            }
            for i in 0..m1 {
                prop_assert_eq!(d[n1 + i], 2 * t1 + i_extra);
            }
            let g2_extra = if kind.connects_inserted() { m1 } else { n1 };
            for u in 0..n2 {
                prop_assert_eq!(d[n1 + m1 + u], d2[u] + g2_extra);
            }
        }
    }

    #[test]
    fn roots_round_trip(mut roots in prop::collection::vec(-10.0f64..10.0, 1..=4)) {
        // roots drawn closer than the reconstruction accuracy make the
        // pairwise comparison meaningless; multiplicities are covered by
        // dedicated unit tests
        for (i, a) in roots.iter().enumerate() {
            for b in &roots[i + 1..] {
                prop_assume!((a - b).abs() > 1e-6);
            }
        }
        let p = RealPolynomial::from_roots(&roots);
        let got = real_roots(&p).unwrap();
        roots.sort_by(|a, b| b.partial_cmp(a).unwrap());
        prop_assert_eq!(got.len(), roots.len());
        for (g, w) in got.iter().zip(&roots) {
            prop_assert!((g - w).abs() <= 1e-8 * w.abs().max(1.0), "{:?} vs {:?}", got, roots);
        }
    }

    #[test]
    fn spectrum_trace_identity(g in arb_graph(10), alpha in 0.0f64..=1.0) {
        let m = alpha_matrix(&g, AlphaParam::new(alpha).unwrap());
        let s = sym_eigenvalues(&m, Some(1e-12)).unwrap();
        let flat = s.flatten();
        prop_assert_eq!(flat.len(), g.n());
        let sum: f64 = flat.iter().sum();
        let tol = 1e-9 * g.n() as f64 * m.norm_inf().max(1.0);
        prop_assert!((sum - m.trace()).abs() <= tol);
    }
}
