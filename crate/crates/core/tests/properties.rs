mod common;

use common::*;
use proptest::prelude::*;
use tnt::bits::binomial;
use tnt::canon::{canonical_form, canonical_graph, are_isomorphic};
use tnt::counting::{classify_bsets, count_bipartite, count_pattern, neighbor_histogram};
use tnt::graph6;
use tnt::hypergraph::{contains_berge_graph, BergeMode, Hypergraph};
use tnt::subgraph::{contains_pattern, copy_edges, find_copy};
use tnt::{Graph, MultipartitePattern};

fn graph_upto(max_n: usize, density: f64) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(proptest::bool::weighted(density), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn graph_with_perms(max_n: usize, perms: usize) -> impl Strategy<Value = (Graph, Vec<Vec<usize>>)> {
    graph_upto(max_n, 0.5).prop_flat_map(move |g| {
        let id: Vec<usize> = (0..g.order()).collect();
        (Just(g), proptest::collection::vec(Just(id).prop_shuffle(), perms))
    })
}

/// Multipartite patterns with at least two parts and at most `total` vertices.
fn pattern_upto(total: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(1..=total - 1, 2..=total).prop_filter("total size", move |p| p.iter().sum::<usize>() <= total)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn canonical_form_is_relabeling_invariant((g, perms) in graph_with_perms(12, 10)) {
        let form = canonical_form(&g);
        let cg = canonical_graph(&g);
        for p in &perms {
            let h = g.permuted(p).unwrap();
            prop_assert_eq!(&canonical_form(&h), &form);
            prop_assert_eq!(&canonical_graph(&h), &cg);
        }
    }

    #[test]
    fn canonical_form_separates_non_isomorphic(g in graph_upto(6, 0.5), h in graph_upto(6, 0.5)) {
        prop_assume!(g.order() == h.order());
        let brute = brute_canonical(&g) == brute_canonical(&h);
        prop_assert_eq!(canonical_form(&g) == canonical_form(&h), brute);
        prop_assert_eq!(are_isomorphic(&g, &h), brute);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip(g in graph_upto(64, 0.3)) {
        let text = graph6::encode(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn counting_matches_naive_enumeration(g in graph_upto(8, 0.6), parts in pattern_upto(6)) {
        let pattern = MultipartitePattern::new(parts.clone()).unwrap();
        prop_assert_eq!(count_pattern(&g, &pattern), naive_count(&g, &parts));
        if let Some((a, b)) = pattern.as_bipartite() {
            prop_assert_eq!(count_bipartite(&g, a, b).unwrap(), naive_count(&g, &parts));
        }
    }

    #[test]
    fn counts_grow_with_edges(g in graph_upto(8, 0.5), parts in pattern_upto(5), u in 0usize..8, v in 0usize..8) {
        prop_assume!(u < g.order() && v < g.order() && u != v);
        let pattern = MultipartitePattern::new(parts).unwrap();
        let more = g.with_edge(u, v).unwrap();
        prop_assert!(count_pattern(&more, &pattern) >= count_pattern(&g, &pattern));
    }

    #[test]
    fn containment_matches_naive(g in graph_upto(7, 0.5), parts in pattern_upto(5)) {
        let pattern = MultipartitePattern::new(parts.clone()).unwrap();
        let expected = naive_contains(&g, &parts);
        prop_assert_eq!(contains_pattern(&g, &pattern), expected);
        if let Some(copy) = find_copy(&g, &pattern, None) {
            let sizes: Vec<usize> = copy.iter().map(|m| m.count_ones() as usize).collect();
            prop_assert_eq!(sizes, pattern.parts().to_vec());
            for (x, y) in copy_edges(&copy) {
                prop_assert!(g.has_edge(x, y));
            }
        }
    }

    #[test]
    fn histograms_partition_all_sets(g in graph_upto(9, 0.5), k in 1usize..4, s in 2usize..4) {
        prop_assume!(k <= g.order());
        let n = g.order() as u64;
        let hist = neighbor_histogram(&g, k).unwrap();
        prop_assert_eq!(hist.total(), binomial(n, k as u64));
        let c = classify_bsets(&g, k, s).unwrap();
        prop_assert_eq!(c.good + c.bad + c.over, binomial(n, k as u64));
        prop_assert_eq!(c.good, hist.get(s - 1));
    }
}

/// A random hypergraph on at most 7 vertices with at most 6 distinct edges.
fn hypergraph() -> impl Strategy<Value = (usize, usize, Vec<Vec<usize>>)> {
    (4usize..=7, 2usize..=4).prop_flat_map(|(n, r)| {
        let r = r.min(n);
        let edge = proptest::sample::subsequence((0..n).collect::<Vec<_>>(), r);
        (Just(n), Just(r), proptest::collection::btree_set(edge, 1..=6))
            .prop_map(|(n, r, set)| (n, r, set.into_iter().collect()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn berge_matches_brute_force((n, r, edges) in hypergraph(), which in 0usize..6, expansion in any::<bool>()) {
        let patterns: [&[usize]; 6] = [&[1, 1], &[1, 2], &[1, 3], &[1, 4], &[2, 2], &[1, 1, 1]];
        let (k, pedges) = multipartite_edges(patterns[which]);
        let h = Hypergraph::new(n, r, &edges).unwrap();
        let pattern = Graph::new(k, &pedges).unwrap();
        let mode = if expansion { BergeMode::Expansion } else { BergeMode::Berge };
        prop_assert_eq!(contains_berge_graph(&h, &pattern, mode), naive_berge(n, &edges, k, &pedges, expansion));
    }

    #[test]
    fn hypergraph_text_round_trip((n, r, edges) in hypergraph()) {
        let h = Hypergraph::new(n, r, &edges).unwrap();
        prop_assert_eq!(Hypergraph::parse(&h.to_text()).unwrap(), h.clone());
        let json = serde_json::to_string(&h).unwrap();
        prop_assert_eq!(serde_json::from_str::<Hypergraph>(&json).unwrap(), h);
    }
}
