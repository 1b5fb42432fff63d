#![allow(dead_code)]

use proptest::prelude::*;
use rootpoly_core::grobner::OrderContext;
use rootpoly_core::signed_graph::positive_root_edges;
use rootpoly_core::{NcWord, SignedEdge, SignedGraph};

/// Greedy independent subgraph: edges are kept in the order drawn while the
/// edge vectors stay linearly independent.
pub fn l_graph(n_max: usize) -> impl Strategy<Value = SignedGraph> {
    (2..=n_max).prop_flat_map(|n| {
        let edges = positive_root_edges(n);
        let m = edges.len();
        prop::collection::vec(0..m, 0..=n).prop_map(move |picks| {
            let mut g = SignedGraph::empty(n);
            for i in picks {
                let h = g.with(edges[i]);
                if h.is_linearly_independent() {
                    g = h;
                }
            }
            g
        })
    })
}

/// Letters `x_ij`, `y_ij` of `[n]`.
pub fn nc_letters(n: usize) -> Vec<SignedEdge> {
    positive_root_edges(n)
        .into_iter()
        .filter(|e| !e.is_loop())
        .collect()
}

pub fn nc_word(n: usize, max_len: usize) -> impl Strategy<Value = NcWord> {
    let letters = nc_letters(n);
    prop::collection::vec(prop::sample::select(letters), 0..=max_len)
        .prop_map(move |word| NcWord { n, word })
}

pub fn contexts(n: usize) -> [OrderContext; 2] {
    [OrderContext::order_j(n), OrderContext::order_y(n)]
}
