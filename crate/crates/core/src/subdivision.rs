//! Commutative reductions on signed graphs: the six subdivision rules,
//! reduction trees and reduced forms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rat, Rational};
use crate::signed_graph::{SignedEdge, SignedGraph};
use crate::strategy::Strategy;

/// The six graph rules, numbered as the left-hand patterns (i < j < k):
/// 1 `{(i,j,-),(j,k,-)}`, 2 `{(i,j,-),(j,k,+)}`, 3 `{(i,k,-),(j,k,+)}`,
/// 4 `{(i,k,+),(j,k,-)}`, 5 `{(i,j,-),(i,j,+)}`, 6 `{(i,j,-),(j,j,+)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SRule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
}

impl fmt::Display for SRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = *self as u8 + 1;
        write!(f, "({k})")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Reduction {
    pub rule: SRule,
    pub first: SignedEdge,
    pub second: SignedEdge,
}

impl Reduction {
    /// The edge both children gain.
    pub fn new_edge(&self) -> SignedEdge {
        let (a, b) = (self.first, self.second);
        match self.rule {
            SRule::R1 => SignedEdge::x(a.lo, b.hi),
            SRule::R2 => SignedEdge::y(a.lo, b.hi),
            SRule::R3 | SRule::R4 => SignedEdge::y(a.lo, b.lo),
            SRule::R5 => SignedEdge::z(a.lo),
            SRule::R6 => SignedEdge::y(a.lo, a.hi),
        }
    }
}

impl fmt::Display for Reduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rule {} on {} {}",
            self.rule,
            self.first.variable(),
            self.second.variable()
        )
    }
}

/// Which rule (if any) applies to an ordered pair of distinct edges.
fn match_rule(a: &SignedEdge, b: &SignedEdge) -> Option<SRule> {
    use crate::signed_graph::Sign::*;
    if a.is_loop() {
        return None;
    }
    if b.is_loop() {
        return (a.is_negative() && b.lo == a.hi).then_some(SRule::R6);
    }
    match (a.sign, b.sign) {
        (Minus, Minus) if a.hi == b.lo => Some(SRule::R1),
        (Minus, Plus) if a.hi == b.lo => Some(SRule::R2),
        (Minus, Plus) if a.hi == b.hi && a.lo < b.lo => Some(SRule::R3),
        (Plus, Minus) if a.hi == b.hi && a.lo < b.lo => Some(SRule::R4),
        (Minus, Plus) if a.lo == b.lo && a.hi == b.hi => Some(SRule::R5),
        _ => None,
    }
}

/// Every rule instance on distinct edge values of `g`, sorted.
pub fn applicable_reductions(g: &SignedGraph) -> Vec<Reduction> {
    let mut distinct = g.edges().to_vec();
    distinct.dedup();
    let mut out = Vec::new();
    for a in &distinct {
        for b in &distinct {
            if let Some(rule) = match_rule(a, b) {
                out.push(Reduction {
                    rule,
                    first: *a,
                    second: *b,
                });
            }
        }
    }
    out.sort();
    out
}

/// `(G₁, G₂, G₃)`: drop `second`, drop `first`, drop both; each gains the
/// new edge. One copy is removed from a multiset.
pub fn apply_reduction(g: &SignedGraph, red: &Reduction) -> Result<[SignedGraph; 3]> {
    let mismatch = || Error::PatternMismatch {
        rule: red.rule.to_string(),
        first: red.first,
        second: red.second,
    };
    if match_rule(&red.first, &red.second) != Some(red.rule) {
        return Err(mismatch());
    }
    let new = red.new_edge();
    let without_first = g.without(&red.first).ok_or_else(mismatch)?;
    let without_second = g.without(&red.second).ok_or_else(mismatch)?;
    let without_both = without_first.without(&red.second).ok_or_else(mismatch)?;
    Ok([
        without_second.with(new),
        without_first.with(new),
        without_both.with(new),
    ])
}

/// The commutative algebra whose relations drive the reductions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub enum CommutativeAlgebra {
    /// Six rules, three children each, the third weighted by β.
    #[default]
    S,
    /// Commutative image of the type C bracket algebra: rules 1-4 with two
    /// children, rule 6 with the three children `z_i x_ij`, `y_ij z_i`,
    /// `z_j y_ij`, and no rule 5.
    Bc,
}

impl CommutativeAlgebra {
    pub fn applicable(self, g: &SignedGraph) -> Vec<Reduction> {
        let mut all = applicable_reductions(g);
        if self == CommutativeAlgebra::Bc {
            all.retain(|r| r.rule != SRule::R5);
        }
        all
    }

    /// Children with their added β power.
    pub fn children(self, g: &SignedGraph, red: &Reduction) -> Result<Vec<(SignedGraph, u32)>> {
        let [g1, g2, g3] = apply_reduction(g, red)?;
        Ok(match (self, red.rule) {
            (CommutativeAlgebra::S, _) => vec![(g1, 0), (g2, 0), (g3, 1)],
            (CommutativeAlgebra::Bc, SRule::R6) => {
                let (i, j) = (red.first.lo, red.first.hi);
                let base = g.without(&red.first).unwrap().without(&red.second).unwrap();
                vec![
                    (base.with(SignedEdge::z(i)).with(SignedEdge::x(i, j)), 0),
                    (base.with(SignedEdge::y(i, j)).with(SignedEdge::z(i)), 0),
                    (base.with(SignedEdge::z(j)).with(SignedEdge::y(i, j)), 0),
                ]
            }
            (CommutativeAlgebra::Bc, SRule::R5) => {
                return Err(Error::PatternMismatch {
                    rule: red.rule.to_string(),
                    first: red.first,
                    second: red.second,
                })
            }
            (CommutativeAlgebra::Bc, _) => vec![(g1, 0), (g2, 0)],
        })
    }
}

/// Node of a materialized reduction tree.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionTree {
    pub graph: SignedGraph,
    pub beta: u32,
    pub step: Option<Step>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Step {
    pub reduction: Reduction,
    pub children: Vec<ReductionTree>,
}

impl ReductionTree {
    pub fn leaves(&self) -> Vec<(&SignedGraph, u32)> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match &t.step {
                None => out.push((&t.graph, t.beta)),
                Some(s) => stack.extend(s.children.iter().rev()),
            }
        }
        out
    }

    pub fn node_count(&self) -> usize {
        1 + self.step.as_ref().map_or(0, |s| {
            s.children.iter().map(ReductionTree::node_count).sum()
        })
    }
}

/// Callback for each internal node: the graph, the reduction applied, and
/// the children with their accumulated β powers.
pub type NodeVisitor<'a> = dyn FnMut(&SignedGraph, &Reduction, &[(SignedGraph, u32)]) + 'a;

/// Options shared by the tree builders.
#[derive(Debug, Clone, Copy)]
pub struct TreeOptions {
    pub algebra: CommutativeAlgebra,
    pub strategy: Strategy,
    pub max_nodes: usize,
}

impl Default for TreeOptions {
    fn default() -> Self {
        TreeOptions {
            algebra: CommutativeAlgebra::S,
            strategy: Strategy::First,
            max_nodes: 2_000_000,
        }
    }
}

/// Depth-first expansion without materializing the tree; returns the
/// leaves with their β powers in depth-first order.
pub fn walk_tree(
    root: &SignedGraph,
    opts: TreeOptions,
    visit: &mut NodeVisitor<'_>,
) -> Result<Vec<(SignedGraph, u32)>> {
    let mut chooser = opts.strategy.chooser();
    let mut leaves = Vec::new();
    let mut stack = vec![(root.clone(), 0u32)];
    let mut nodes = 0usize;
    while let Some((g, beta)) = stack.pop() {
        nodes += 1;
        if nodes > opts.max_nodes {
            return Err(Error::GuardExceeded {
                what: "tree nodes",
                value: nodes as u128,
                limit: opts.max_nodes as u128,
            });
        }
        let options = opts.algebra.applicable(&g);
        if options.is_empty() {
            leaves.push((g, beta));
            continue;
        }
        let red = options[chooser.pick(options.len())];
        let children: Vec<(SignedGraph, u32)> = opts
            .algebra
            .children(&g, &red)?
            .into_iter()
            .map(|(c, b)| (c, beta + b))
            .collect();
        visit(&g, &red, &children);
        stack.extend(children.into_iter().rev());
    }
    Ok(leaves)
}

pub fn build_tree(root: &SignedGraph, opts: TreeOptions) -> Result<ReductionTree> {
    let mut chooser = opts.strategy.chooser();
    let mut nodes = 0usize;
    build_node(root.clone(), 0, opts, &mut chooser, &mut nodes)
}

fn build_node(
    g: SignedGraph,
    beta: u32,
    opts: TreeOptions,
    chooser: &mut crate::strategy::Chooser,
    nodes: &mut usize,
) -> Result<ReductionTree> {
    *nodes += 1;
    if *nodes > opts.max_nodes {
        return Err(Error::GuardExceeded {
            what: "tree nodes",
            value: *nodes as u128,
            limit: opts.max_nodes as u128,
        });
    }
    let options = opts.algebra.applicable(&g);
    if options.is_empty() {
        return Ok(ReductionTree {
            graph: g,
            beta,
            step: None,
        });
    }
    let red = options[chooser.pick(options.len())];
    let mut children = Vec::new();
    for (c, b) in opts.algebra.children(&g, &red)? {
        children.push(build_node(c, beta + b, opts, chooser, nodes)?);
    }
    Ok(ReductionTree {
        graph: g,
        beta,
        step: Some(Step {
            reduction: red,
            children,
        }),
    })
}

pub fn build_s_tree(root: &SignedGraph, strategy: Strategy) -> Result<ReductionTree> {
    build_tree(
        root,
        TreeOptions {
            strategy,
            ..TreeOptions::default()
        },
    )
}

/// Commutative monomial: a graph and a power of β.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CMonomial {
    pub graph: SignedGraph,
    pub beta: u32,
}

impl Ord for CMonomial {
    /// Higher degree first, then sorted edge lists, then β power.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .graph
            .len()
            .cmp(&self.graph.len())
            .then_with(|| self.graph.edges().cmp(other.graph.edges()))
            .then(self.beta.cmp(&other.beta))
    }
}

impl PartialOrd for CMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CPolynomial {
    terms: BTreeMap<CMonomial, Rational>,
}

impl CPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(graph: SignedGraph) -> Self {
        let mut p = Self::new();
        p.add(CMonomial { graph, beta: 0 }, Rational::one());
        p
    }

    pub fn add(&mut self, m: CMonomial, c: Rational) {
        let entry = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value with every variable set to 1 and β set to `beta`.
    pub fn evaluate_at_ones(&self, beta: Rational) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| c * num_traits::pow(beta, m.beta as usize))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// The part that survives at β = 0.
    pub fn at_beta_zero(&self) -> CPolynomial {
        CPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.beta == 0)
                .map(|(m, c)| (m.clone(), *c))
                .collect(),
        }
    }
}

pub(crate) fn format_term(coeff: &Rational, beta: u32, monomial: &str) -> String {
    let mut parts = Vec::new();
    if *coeff == -Rational::one() {
        parts.push("-".to_string());
    } else if *coeff != Rational::one() {
        parts.push(coeff.to_string());
    }
    match beta {
        0 => {}
        1 => parts.push("beta".into()),
        b => parts.push(format!("beta^{b}")),
    }
    if monomial != "1" || parts.is_empty() || parts == ["-"] {
        parts.push(monomial.to_string());
    }
    let s = parts.join(" ");
    s.replacen("- ", "-", 1)
}

pub(crate) fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = terms[0].clone();
    for t in &terms[1..] {
        match t.strip_prefix('-') {
            Some(rest) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            None => {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
    }
    out
}

impl fmt::Display for CPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| format_term(c, m.beta, &m.graph.monomial()))
            .collect();
        f.write_str(&join_terms(terms))
    }
}

#[derive(Serialize)]
struct TermJson {
    coeff: String,
    beta: u32,
    monomial: String,
}

impl Serialize for CPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                beta: m.beta,
                monomial: m.graph.monomial(),
            })
            .collect();
        v.serialize(s)
    }
}

/// Sum of the leaves with β raised to their edge deficit.
pub fn polynomial_from_leaves(leaves: &[(SignedGraph, u32)]) -> CPolynomial {
    let mut p = CPolynomial::new();
    for (g, beta) in leaves {
        p.add(
            CMonomial {
                graph: g.clone(),
                beta: *beta,
            },
            rat(1),
        );
    }
    p
}

pub fn reduced_form(root: &SignedGraph, opts: TreeOptions) -> Result<CPolynomial> {
    let leaves = walk_tree(root, opts, &mut |_, _, _| {})?;
    Ok(polynomial_from_leaves(&leaves))
}

pub fn reduced_form_s(root: &SignedGraph, strategy: Strategy) -> Result<CPolynomial> {
    reduced_form(
        root,
        TreeOptions {
            strategy,
            ..TreeOptions::default()
        },
    )
}

/// Leaves carrying as many edges as the root.
pub fn leaf_count_full(tree: &ReductionTree) -> usize {
    let d = tree.graph.len();
    tree.leaves().iter().filter(|(g, _)| g.len() == d).count()
}

/// `f(G)`: the full-degree leaf count of the default S-tree.
pub fn full_leaf_count(root: &SignedGraph, strategy: Strategy) -> Result<usize> {
    let leaves = walk_tree(
        root,
        TreeOptions {
            strategy,
            ..TreeOptions::default()
        },
        &mut |_, _, _| {},
    )?;
    Ok(leaves.iter().filter(|(g, _)| g.len() == root.len()).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed_graph::SignedEdge as E;

    fn g(n: usize, es: &[E]) -> SignedGraph {
        SignedGraph::new(n, es.to_vec()).unwrap()
    }

    #[test]
    fn applicable_on_coxeter_graph() {
        let reds = applicable_reductions(&g(3, &[E::x(1, 2), E::x(2, 3), E::z(3)]));
        assert_eq!(
            reds,
            vec![
                Reduction {
                    rule: SRule::R1,
                    first: E::x(1, 2),
                    second: E::x(2, 3)
                },
                Reduction {
                    rule: SRule::R6,
                    first: E::x(2, 3),
                    second: E::z(3)
                },
            ]
        );
        assert!(applicable_reductions(&g(2, &[E::x(1, 2), E::z(1)])).is_empty());
        assert!(applicable_reductions(&SignedGraph::empty(2)).is_empty());
    }

    #[test]
    fn rule_one_children() {
        let g0 = g(3, &[E::x(1, 2), E::x(2, 3)]);
        let red = applicable_reductions(&g0)[0];
        let [g1, g2, g3] = apply_reduction(&g0, &red).unwrap();
        assert_eq!(g1, g(3, &[E::x(1, 2), E::x(1, 3)]));
        assert_eq!(g2, g(3, &[E::x(2, 3), E::x(1, 3)]));
        assert_eq!(g3, g(3, &[E::x(1, 3)]));
    }

    #[test]
    fn rule_six_children() {
        let g0 = g(3, &[E::x(1, 2), E::z(3), E::x(1, 3)]);
        let red = Reduction {
            rule: SRule::R6,
            first: E::x(1, 3),
            second: E::z(3),
        };
        let [g1, g2, g3] = apply_reduction(&g0, &red).unwrap();
        assert_eq!(g1, g(3, &[E::x(1, 2), E::x(1, 3), E::y(1, 3)]));
        assert_eq!(g2, g(3, &[E::x(1, 2), E::z(3), E::y(1, 3)]));
        assert_eq!(g3, g(3, &[E::x(1, 2), E::y(1, 3)]));
    }

    #[test]
    fn rule_five_removes_both_parallel_edges() {
        let g0 = g(2, &[E::x(1, 2), E::y(1, 2)]);
        let red = applicable_reductions(&g0)[0];
        assert_eq!(red.rule, SRule::R5);
        let [g1, g2, g3] = apply_reduction(&g0, &red).unwrap();
        assert_eq!(g1, g(2, &[E::x(1, 2), E::z(1)]));
        assert_eq!(g2, g(2, &[E::y(1, 2), E::z(1)]));
        assert_eq!(g3, g(2, &[E::z(1)]));
    }

    #[test]
    fn mismatched_pattern() {
        let g0 = g(3, &[E::x(1, 2), E::x(2, 3)]);
        let red = Reduction {
            rule: SRule::R2,
            first: E::x(1, 2),
            second: E::x(2, 3),
        };
        assert!(matches!(
            apply_reduction(&g0, &red),
            Err(Error::PatternMismatch { .. })
        ));
        let red = Reduction {
            rule: SRule::R1,
            first: E::x(1, 2),
            second: E::x(2, 4),
        };
        assert!(apply_reduction(&g(4, &[E::x(1, 2)]), &red).is_err());
    }

    #[test]
    fn s_reduction_of_x12_x13_z3() {
        let root = g(3, &[E::x(1, 2), E::x(1, 3), E::z(3)]);
        let p = reduced_form_s(&root, Strategy::First).unwrap();
        assert_eq!(
            p.to_string(),
            "z1 x12 x13 + z1 x12 y13 + x12 y13 z3 + beta z1 x12 + beta x12 y13"
        );
        let tree = build_s_tree(&root, Strategy::First).unwrap();
        assert_eq!(tree.leaves().len(), 5);
        assert_eq!(leaf_count_full(&tree), 3);
    }

    #[test]
    fn alternating_root_is_fixed() {
        let root = g(2, &[E::x(1, 2), E::z(1)]);
        let p = reduced_form_s(&root, Strategy::Last).unwrap();
        assert_eq!(p, CPolynomial::monomial(root.clone()));
        assert_eq!(
            build_s_tree(&root, Strategy::First).unwrap().node_count(),
            1
        );
    }

    #[test]
    fn bc_rule_six_matches_two_s_steps() {
        let root = g(2, &[E::x(1, 2), E::z(2)]);
        let opts = TreeOptions {
            algebra: CommutativeAlgebra::Bc,
            ..TreeOptions::default()
        };
        let bc = reduced_form(&root, opts).unwrap();
        let s = reduced_form_s(&root, Strategy::First).unwrap();
        assert_eq!(bc, s.at_beta_zero());
        assert_eq!(bc.len(), 3);
    }

    #[test]
    fn node_guard() {
        let opts = TreeOptions {
            max_nodes: 3,
            ..TreeOptions::default()
        };
        let root = SignedGraph::p_l(4);
        assert!(matches!(
            walk_tree(&root, opts, &mut |_, _, _| {}),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn term_formatting() {
        assert_eq!(format_term(&rat(1), 0, "x12"), "x12");
        assert_eq!(format_term(&rat(-1), 2, "x12"), "-beta^2 x12");
        assert_eq!(format_term(&rat(3), 0, "1"), "3");
        assert_eq!(format_term(&rat(-1), 0, "1"), "-1");
        assert_eq!(join_terms(vec!["x12".into(), "-y12".into()]), "x12 - y12");
    }
}
