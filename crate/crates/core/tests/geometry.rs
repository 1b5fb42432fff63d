mod common;

use proptest::prelude::*;
use rootpoly_core::combinatorics::{central_binomial_count, factorial};
use rootpoly_core::ehrhart::{ehrhart_fit, ehrhart_formula_pl, lattice_count, reciprocity_holds};
use rootpoly_core::linalg::rat;
use rootpoly_core::root_geometry::{closure_by_cone, cone_contains, edge_vector};
use rootpoly_core::subdivision::{walk_tree, TreeOptions};
use rootpoly_core::volume::{
    check_reduction_node, polytope_volume, triangulate, volume_by_leaves, VolumeCache,
};
use rootpoly_core::{SignedGraph, Strategy};

#[test]
fn full_polytope_volume_and_triangulation() {
    for n in 1..=4 {
        let p = SignedGraph::p_l(n);
        let expected =
            rat(2 * central_binomial_count(n as u64) as i128) / rat(factorial(n as u64) as i128);
        assert_eq!(polytope_volume(&p).unwrap(), expected);
        let t = triangulate(&p).unwrap();
        assert_eq!(t.volume, expected.to_string());
        assert_eq!(t.f as u128, central_binomial_count(n as u64));
    }
}

#[test]
fn ehrhart_leading_coefficient_is_volume() {
    for n in 1..=3 {
        let formula = ehrhart_formula_pl(n);
        assert_eq!(
            formula.leading(),
            polytope_volume(&SignedGraph::p_l(n)).unwrap()
        );
        assert_eq!(formula.eval(0), rat(1));
    }
}

#[test]
fn fitted_polynomials_satisfy_reciprocity() {
    for n in 1..=3 {
        let p = SignedGraph::p_l(n);
        let fit = ehrhart_fit(&p).unwrap();
        assert_eq!(fit, ehrhart_formula_pl(n));
        for t in 1..=3 {
            assert!(reciprocity_holds(&p, &fit, t).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn volume_is_strategy_independent(g in common::l_graph(5), seed in any::<u64>()) {
        prop_assert_eq!(volume_by_leaves(&g, Strategy::Seeded(seed)).unwrap(), polytope_volume(&g).unwrap());
    }

    #[test]
    fn volumes_add_at_every_node(g in common::l_graph(4), seed in any::<u64>()) {
        let opts = TreeOptions { strategy: Strategy::Seeded(seed), ..TreeOptions::default() };
        let mut nodes = Vec::new();
        walk_tree(&g, opts, &mut |g0, red, kids| {
            nodes.push((g0.clone(), *red, kids.iter().map(|(c, _)| c.clone()).collect::<Vec<_>>()));
        }).unwrap();
        let mut cache = VolumeCache::default();
        for (g0, red, kids) in &nodes {
            let check = check_reduction_node(&mut cache, g0, red, kids).unwrap();
            prop_assert!(check.volume_ok && check.rank_ok, "{}", g0.monomial());
        }
    }

    #[test]
    fn closure_edges_lie_in_the_cone(g in common::l_graph(4)) {
        let closure = closure_by_cone(&g);
        for e in closure.edges() {
            prop_assert!(cone_contains(&g, &edge_vector(e, g.n())));
        }
        for e in g.edges() {
            prop_assert!(closure.contains(e));
        }
    }

    #[test]
    fn lattice_counts_grow_with_dilation(g in common::l_graph(3)) {
        let mut last = 0;
        for t in 0..=3 {
            let c = lattice_count(&g, t, false).unwrap();
            prop_assert!(c >= last);
            prop_assert!(lattice_count(&g, t, true).unwrap() <= c);
            last = c;
        }
        prop_assert!(lattice_count(&g, 1, false).unwrap() > g.len() as u64);
    }
}
