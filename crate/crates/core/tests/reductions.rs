mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rootpoly_core::bracket::{
    coxeter_c, nc_applicable, nc_reduce, normal_form, AlgebraMode, PriorityReading, ReduceOptions,
};
use rootpoly_core::notation::parse_word;
use rootpoly_core::subdivision::{
    applicable_reductions, build_tree, full_leaf_count, leaf_count_full, reduced_form,
    CommutativeAlgebra, TreeOptions,
};
use rootpoly_core::verify::random_good_d_words;
use rootpoly_core::volume::cyclic_components;
use rootpoly_core::{NcWord, Strategy};

fn word(s: &str) -> NcWord {
    let (_, letters) = parse_word(s).unwrap();
    let n = letters.iter().map(|e| e.hi).max().unwrap();
    NcWord::new(n, letters).unwrap()
}

#[test]
fn coxeter_forms_agree_between_c_and_beta_at_zero() {
    for n in 2..=4 {
        let w = coxeter_c(n).unwrap();
        let c = nc_reduce(&w, ReduceOptions::new(AlgebraMode::C, Strategy::First)).unwrap();
        let cb = nc_reduce(&w, ReduceOptions::new(AlgebraMode::CBeta, Strategy::Last)).unwrap();
        assert_eq!(cb.at_beta_zero(), c);
    }
}

#[test]
fn nc_leaves_are_irreducible() {
    let w = word("x12 x23 x34 z4");
    let p = nc_reduce(
        &w,
        ReduceOptions::new(AlgebraMode::CBeta, Strategy::Seeded(5)),
    )
    .unwrap();
    for (k, _) in p.terms() {
        assert!(
            nc_applicable(&k.word, AlgebraMode::CBeta, PriorityReading::Off).is_empty(),
            "{}",
            k.word
        );
    }
}

#[test]
fn good_d_words_reduce_uniquely() {
    for w in random_good_d_words(25, 4, 6, 11) {
        let forms: BTreeSet<String> = Strategy::family(6)
            .into_iter()
            .map(|s| {
                nc_reduce(&w, ReduceOptions::new(AlgebraMode::D, s))
                    .unwrap()
                    .to_string()
            })
            .collect();
        assert_eq!(forms.len(), 1, "{w}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn full_leaf_count_is_order_invariant(g in common::l_graph(5), seed in any::<u64>()) {
        let first = full_leaf_count(&g, Strategy::First).unwrap();
        prop_assert_eq!(full_leaf_count(&g, Strategy::Seeded(seed)).unwrap(), first);
    }

    #[test]
    fn s_tree_leaves_are_terminal_and_independent(g in common::l_graph(5), seed in any::<u64>()) {
        let opts = TreeOptions { strategy: Strategy::Seeded(seed), ..TreeOptions::default() };
        let t = build_tree(&g, opts).unwrap();
        for (leaf, beta) in t.leaves() {
            prop_assert!(applicable_reductions(leaf).is_empty());
            prop_assert!(leaf.is_linearly_independent());
            prop_assert_eq!(leaf.len() + beta as usize, g.len());
        }
        prop_assert_eq!(leaf_count_full(&t), full_leaf_count(&g, Strategy::First).unwrap());
    }

    #[test]
    fn full_leaves_keep_cycle_count(g in common::l_graph(5)) {
        let t = build_tree(&g, TreeOptions::default()).unwrap();
        let k = cyclic_components(&g);
        for (leaf, _) in t.leaves().into_iter().filter(|(l, _)| l.len() == g.len()) {
            prop_assert!(leaf.is_alternating());
            prop_assert_eq!(cyclic_components(leaf), k);
        }
    }

    #[test]
    fn bc_form_is_beta_free(g in common::l_graph(4)) {
        let opts = TreeOptions { algebra: CommutativeAlgebra::Bc, ..TreeOptions::default() };
        let p = reduced_form(&g, opts).unwrap();
        prop_assert!(p.terms().all(|(m, _)| m.beta == 0));
    }

    #[test]
    fn normal_form_is_idempotent(w in common::nc_word(5, 6)) {
        let nf = normal_form(&w);
        prop_assert_eq!(normal_form(&nf), nf);
    }
}
