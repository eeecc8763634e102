mod common;

use proptest::prelude::*;

use common::Naive;
use limpack::io::{from_graph6, to_graph6};
use limpack::{ops, verify, Graph, Solver, VertexPartition, VertexSet};

fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut j = 0;
    for v in 1..n {
        for u in 0..v {
            if bits >> (j % 64) & 1 == 1 {
                edges.push((u, v));
            }
            j += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, bits)| graph_from_bits(n, bits))
}

fn graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    (graphs(max_n), any::<u64>()).prop_map(|(g, bits)| {
        let n = g.n();
        let set = VertexSet::from_members(n, (0..n).filter(|v| bits >> v & 1 == 1)).unwrap();
        (g, set)
    })
}

/// Floyd–Warshall distances.
fn all_pairs(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                if d[u][w] + d[w][v] < d[u][v] {
                    d[u][v] = d[u][w] + d[w][v];
                }
            }
        }
    }
    d
}

/// Shortest cycle by trying every cyclic vertex sequence of length `≤ n`.
fn brute_girth(g: &Graph) -> Option<usize> {
    fn extend(g: &Graph, path: &mut Vec<usize>, len: usize) -> bool {
        let last = *path.last().unwrap();
        if path.len() == len {
            return g.has_edge(last, path[0]);
        }
        for w in g.neighbors(last) {
            if w > path[0] && !path.contains(&w) {
                path.push(w);
                if extend(g, path, len) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (3..=g.n()).find(|&len| (0..g.n()).any(|s| extend(g, &mut vec![s], len)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn complement_is_an_involution(g in graphs(12)) {
        let c = ops::complement(&g);
        prop_assert_eq!(c.m() + g.m(), g.n() * (g.n() - 1) / 2);
        prop_assert_eq!(ops::complement(&c), g);
    }

    #[test]
    fn lexicographic_degrees(g in graphs(6), h in graphs(4)) {
        let p = ops::lexicographic_product(&g, &h).unwrap();
        prop_assert_eq!(p.n(), g.n() * h.n());
        for a in 0..g.n() {
            for b in 0..h.n() {
                prop_assert_eq!(p.degree(a * h.n() + b), g.degree(a) * h.n() + h.degree(b));
            }
        }
    }

    #[test]
    fn girth_matches_cycle_search(g in graphs(7)) {
        prop_assert_eq!(ops::girth(&g).length(), brute_girth(&g));
    }

    #[test]
    fn square_matches_distances(g in graphs(7)) {
        let s = ops::square(&g);
        let d = all_pairs(&g);
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u != v {
                    prop_assert_eq!(s.has_edge(u, v), d[u][v] <= 2);
                }
            }
        }
    }

    #[test]
    fn corona_shape(g in graphs(10)) {
        let c = ops::corona_k1(&g);
        prop_assert_eq!(c.n(), 2 * g.n());
        prop_assert_eq!(c.m(), g.m() + g.n());
        for v in g.n()..c.n() {
            prop_assert_eq!(c.degree(v), 1);
        }
    }

    #[test]
    fn graph6_roundtrip(g in graphs(40)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn packing_is_the_k1_case((g, b) in graph_and_set(9)) {
        prop_assert_eq!(
            verify::is_packing(&g, &b).unwrap(),
            verify::is_k_limited_packing(&g, &b, 1).unwrap().is_pass()
        );
        prop_assert_eq!(
            verify::is_open_packing(&g, &b).unwrap(),
            verify::is_k_total_limited_packing(&g, &b, 1).unwrap().is_pass()
        );
    }

    #[test]
    fn packing_predicates_are_monotone((g, b) in graph_and_set(9), k in 1usize..4, drop in any::<u64>()) {
        let lp = verify::is_k_limited_packing(&g, &b, k).unwrap().is_pass();
        let tlp = verify::is_k_total_limited_packing(&g, &b, k).unwrap().is_pass();
        if lp {
            prop_assert!(verify::is_k_limited_packing(&g, &b, k + 1).unwrap().is_pass());
            prop_assert!(tlp);
        }
        if tlp {
            prop_assert!(verify::is_k_total_limited_packing(&g, &b, k + 1).unwrap().is_pass());
        }
        let mut sub = b.clone();
        for v in b.iter().filter(|v| drop >> v & 1 == 1) {
            sub.remove(v);
        }
        if lp {
            prop_assert!(verify::is_k_limited_packing(&g, &sub, k).unwrap().is_pass());
        }
        if tlp {
            prop_assert!(verify::is_k_total_limited_packing(&g, &sub, k).unwrap().is_pass());
        }
    }

    #[test]
    fn predicates_match_naive_counts((g, b) in graph_and_set(9), k in 1usize..4) {
        let o = Naive::new(&g);
        let mask = b.iter().fold(0u32, |m, v| m | 1 << v);
        prop_assert_eq!(verify::is_k_limited_packing(&g, &b, k).unwrap().is_pass(), o.is_packing_k(mask, k, true));
        prop_assert_eq!(verify::is_k_total_limited_packing(&g, &b, k).unwrap().is_pass(), o.is_packing_k(mask, k, false));
        match verify::is_k_tuple_dominating(&g, &b, k) {
            Ok(v) => prop_assert_eq!(v.is_pass(), o.is_tuple_dom(mask, k)),
            Err(_) => prop_assert!(g.min_degree() + 1 < k),
        }
    }

    #[test]
    fn two_distance_colorings_are_packing_partitions(g in graphs(8), labels in prop::collection::vec(0usize..4, 8)) {
        let p = VertexPartition::from_labels(labels[..g.n()].to_vec());
        if let Ok(p) = p {
            prop_assert_eq!(
                verify::is_2distance_coloring(&g, &p).unwrap(),
                verify::classes_are_packings(&g, &p).unwrap()
            );
        }
    }

    #[test]
    fn certificates_verify(g in graphs(10), k in 1usize..4) {
        let s = Solver::new();
        let lk = s.l_k(&g, k).unwrap();
        prop_assert!(verify::is_k_limited_packing(&g, lk.set().unwrap(), k).unwrap().is_pass());
        let lkt = s.l_kt(&g, k).unwrap();
        prop_assert!(verify::is_k_total_limited_packing(&g, lkt.set().unwrap(), k).unwrap().is_pass());
        prop_assert!(lk.exact() <= lkt.exact());
        let chi = s.chi_xk(&g, k).unwrap();
        prop_assert!(verify::is_klp_partition(&g, chi.partition().unwrap(), k).unwrap().is_pass());
        if let Some(gamma) = s.gamma_xk(&g, k).unwrap().set() {
            prop_assert!(verify::is_k_tuple_dominating(&g, gamma, k).unwrap().is_pass());
        }
        if let Some(d) = s.d_xk(&g, k).unwrap().partition() {
            prop_assert!(verify::is_ktd_partition(&g, d, k).unwrap().is_pass());
        }
        let c2 = s.chi2(&g).unwrap();
        prop_assert!(verify::is_2distance_coloring(&g, c2.partition().unwrap()).unwrap());
    }

    #[test]
    fn partitions_normalize_idempotently(labels in prop::collection::vec(0usize..5, 1..12)) {
        if let Ok(p) = VertexPartition::from_labels(labels) {
            let q = p.normalized();
            prop_assert_eq!(q.normalized(), q.clone());
            prop_assert_eq!(q.class_count(), p.class_count());
        }
    }
}
