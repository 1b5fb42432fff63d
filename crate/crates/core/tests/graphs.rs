mod common;

use proptest::prelude::*;
use rootpoly_core::combinatorics::central_binomial_count;
use rootpoly_core::linalg::rank;
use rootpoly_core::root_geometry::edge_vectors;
use rootpoly_core::signed_graph::{
    alternating_well_structured, alternating_wws_subgraphs, parse_graph_json, parse_graph_text,
    positive_root_edges,
};
use rootpoly_core::SignedGraph;

#[test]
fn alternating_well_structured_counts() {
    for n in 1..=5 {
        let all = alternating_well_structured(n);
        assert_eq!(
            all.len() as u128,
            central_binomial_count(n as u64),
            "n = {n}"
        );
        for g in &all {
            assert!(g.is_alternating() && g.is_well_structured() && g.is_linearly_independent());
            assert_eq!(g.len(), n);
            assert!(
                g.lexicographic_labeling().is_well_labeled(),
                "{}",
                g.monomial()
            );
        }
    }
}

#[test]
fn weakly_well_structured_contains_full_ones() {
    for n in 2..=4 {
        let weak = alternating_wws_subgraphs(n);
        for g in alternating_well_structured(n) {
            assert!(weak.contains(&g));
        }
        assert!(weak.iter().all(|g| g.is_weakly_well_structured()));
    }
}

#[test]
fn p_l_is_well_structured() {
    for n in 1..=6 {
        let p = SignedGraph::p_l(n);
        assert!(p.is_well_structured());
        assert_eq!(p.loop_count(), 1);
    }
}

proptest! {
    #[test]
    fn text_and_json_round_trip(g in common::l_graph(6)) {
        prop_assert_eq!(parse_graph_text(&g.to_string()).unwrap(), g.clone());
        let js = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(parse_graph_json(&js).unwrap(), g);
    }

    #[test]
    fn independence_matches_rank(n in 2usize..=5, picks in prop::collection::vec(0usize..40, 0..6)) {
        let edges = positive_root_edges(n);
        let chosen: Vec<_> = picks.iter().map(|i| edges[i % edges.len()]).collect();
        let g = SignedGraph::new(n, chosen).unwrap();
        prop_assert_eq!(g.is_linearly_independent(), rank(&edge_vectors(&g)) == g.len());
    }

    #[test]
    fn removing_an_edge_keeps_independence(g in common::l_graph(5)) {
        for e in g.edges() {
            prop_assert!(g.without(e).unwrap().is_linearly_independent());
        }
    }
}
