//! Normalized volumes of coned root polytopes and the canonical
//! triangulation of well-structured ones.

use std::collections::HashMap;

use num_traits::Signed;
use serde::Serialize;

use crate::combinatorics::factorial;
use crate::error::{Error, Result};
use crate::linalg::{det, rank, rat, Rational};
use crate::root_geometry::{edge_vectors, transitive_closure};
use crate::signed_graph::{spanning_well_structured, SignedGraph};
use crate::strategy::Strategy;
use crate::subdivision::{walk_tree, Reduction, TreeOptions};

/// Number of components carrying a cycle (edges = vertices), loops included.
pub fn cyclic_components(g: &SignedGraph) -> usize {
    let comp = g.components();
    let mut vertices = vec![0usize; g.n() + 1];
    let mut edges = vec![0usize; g.n() + 1];
    for v in 1..=g.n() {
        vertices[comp[v]] += 1;
    }
    for e in g.edges() {
        edges[comp[e.lo]] += 1;
    }
    (1..=g.n())
        .filter(|&c| edges[c] > 0 && edges[c] == vertices[c])
        .count()
}

/// Columns kept after dropping the smallest vertex of every tree component
/// (isolated vertices included).
pub fn kept_columns(g: &SignedGraph) -> Vec<usize> {
    let comp = g.components();
    let mut vertices = vec![0usize; g.n() + 1];
    let mut edges = vec![0usize; g.n() + 1];
    for v in 1..=g.n() {
        vertices[comp[v]] += 1;
    }
    for e in g.edges() {
        edges[comp[e.lo]] += 1;
    }
    let mut dropped = vec![false; g.n() + 1];
    for v in 1..=g.n() {
        let c = comp[v];
        let smallest = (1..=g.n()).find(|&u| comp[u] == c).unwrap();
        if edges[c] < vertices[c] && v == smallest {
            dropped[v] = true;
        }
    }
    (1..=g.n())
        .filter(|&v| !dropped[v])
        .map(|v| v - 1)
        .collect()
}

/// `|det M| / d!` where `M` is the edge-vector matrix restricted to
/// [`kept_columns`]. Returns `None` if `M` is not square.
pub fn determinant_volume(g: &SignedGraph) -> Option<Rational> {
    let cols = kept_columns(g);
    if cols.len() != g.len() {
        return None;
    }
    let m: Vec<Vec<i64>> = edge_vectors(g)
        .iter()
        .map(|row| cols.iter().map(|&c| row[c]).collect())
        .collect();
    Some(det(&m).abs() / rat(factorial(g.len() as u64) as i128))
}

/// Volume of the simplex `P(G)` for alternating `G` in `L_n`: `2^k / d!`.
pub fn simplex_volume(g: &SignedGraph) -> Result<Rational> {
    if !g.is_alternating() {
        return Err(Error::NotAlternating);
    }
    if !g.is_linearly_independent() {
        return Err(Error::NotIndependent);
    }
    let k = cyclic_components(g) as u32;
    Ok(rat(2i128.pow(k)) / rat(factorial(g.len() as u64) as i128))
}

/// Volume of `P(G)` for `G` in `L_n` via `2^k f(G) / d!`, with `f` the
/// full-degree leaf count of the default S-tree.
pub fn polytope_volume(g: &SignedGraph) -> Result<Rational> {
    VolumeCache::default().volume(g)
}

/// Sum of determinant volumes over the full-degree leaves of an S-tree.
pub fn volume_by_leaves(g: &SignedGraph, strategy: Strategy) -> Result<Rational> {
    let opts = TreeOptions {
        strategy,
        ..TreeOptions::default()
    };
    let leaves = walk_tree(g, opts, &mut |_, _, _| {})?;
    let mut total = rat(0);
    for (leaf, _) in leaves.iter().filter(|(l, _)| l.len() == g.len()) {
        total += determinant_volume(leaf).ok_or(Error::NotIndependent)?;
    }
    Ok(total)
}

/// Memoized full-degree leaf counts and volumes.
#[derive(Debug, Default)]
pub struct VolumeCache {
    f: HashMap<SignedGraph, u64>,
}

impl VolumeCache {
    pub fn leaf_count(&mut self, g: &SignedGraph) -> Result<u64> {
        if let Some(&f) = self.f.get(g) {
            return Ok(f);
        }
        let leaves = walk_tree(g, TreeOptions::default(), &mut |_, _, _| {})?;
        let f = leaves.iter().filter(|(l, _)| l.len() == g.len()).count() as u64;
        self.f.insert(g.clone(), f);
        Ok(f)
    }

    pub fn volume(&mut self, g: &SignedGraph) -> Result<Rational> {
        if !g.is_linearly_independent() {
            return Err(Error::NotIndependent);
        }
        let f = self.leaf_count(g)?;
        let k = cyclic_components(g) as u32;
        Ok(rat(2i128.pow(k) * f as i128) / rat(factorial(g.len() as u64) as i128))
    }
}

/// Outcome of checking volume additivity at one S-tree node.
#[derive(Debug, Clone, Serialize)]
pub struct NodeCheck {
    pub graph: SignedGraph,
    pub reduction: Reduction,
    pub volume_ok: bool,
    pub rank_ok: bool,
}

/// Checks `vol(G₀) = vol(G₁) + vol(G₂)` and `rank V(G₃) = d - 1` at one
/// node; volumes come from independent default trees.
pub fn check_reduction_node(
    cache: &mut VolumeCache,
    g0: &SignedGraph,
    reduction: &Reduction,
    children: &[SignedGraph],
) -> Result<NodeCheck> {
    let d = g0.len();
    let v0 = cache.volume(g0)?;
    let v1 = cache.volume(&children[0])?;
    let v2 = cache.volume(&children[1])?;
    let rank_ok = children
        .get(2)
        .is_none_or(|g3| g3.len() == d - 1 && rank(&edge_vectors(g3)) == d - 1);
    Ok(NodeCheck {
        graph: g0.clone(),
        reduction: *reduction,
        volume_ok: v0 == v1 + v2,
        rank_ok,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Triangulation {
    pub root: SignedGraph,
    pub simplices: Vec<SignedGraph>,
    pub volume: String,
    pub f: usize,
    pub k: usize,
    pub d: usize,
}

/// Simplices of the canonical triangulation of `P(T)` for well-structured
/// `T`: the alternating well-structured spanning graphs of its closure.
pub fn triangulate(t: &SignedGraph) -> Result<Triangulation> {
    if !t.is_well_structured() {
        return Err(Error::NotWellStructured);
    }
    let closure = transitive_closure(t);
    let simplices = spanning_well_structured(t.n(), closure.edges());
    let mut volume = rat(0);
    for s in &simplices {
        volume += simplex_volume(s)?;
    }
    Ok(Triangulation {
        root: t.clone(),
        f: simplices.len(),
        simplices,
        volume: volume.to_string(),
        k: cyclic_components(t),
        d: t.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed_graph::{alternating_well_structured, SignedEdge as E};

    fn g(n: usize, es: &[E]) -> SignedGraph {
        SignedGraph::new(n, es.to_vec()).unwrap()
    }

    #[test]
    fn simplex_examples() {
        assert_eq!(
            simplex_volume(&g(2, &[E::x(1, 2), E::z(1)])).unwrap(),
            rat(1)
        );
        assert_eq!(
            simplex_volume(&g(3, &[E::x(1, 2), E::x(1, 3)])).unwrap(),
            Rational::new(1, 2)
        );
        assert_eq!(
            simplex_volume(&g(3, &[E::x(1, 2), E::x(1, 3), E::z(1)])).unwrap(),
            Rational::new(1, 3)
        );
        assert_eq!(
            simplex_volume(&g(2, &[E::x(1, 2), E::z(2)])),
            Err(Error::NotAlternating)
        );
    }

    #[test]
    fn determinant_agrees_with_formula() {
        for n in 1..=4 {
            for t in alternating_well_structured(n) {
                assert_eq!(determinant_volume(&t), Some(simplex_volume(&t).unwrap()));
            }
        }
        let forest = g(4, &[E::y(1, 2), E::x(3, 4)]);
        assert_eq!(determinant_volume(&forest), Some(Rational::new(1, 2)));
    }

    #[test]
    fn full_polytope_volume() {
        assert_eq!(polytope_volume(&SignedGraph::p_l(2)).unwrap(), rat(3));
        assert_eq!(
            polytope_volume(&SignedGraph::p_l(3)).unwrap(),
            Rational::new(10 * 2, 6)
        );
        assert_eq!(
            volume_by_leaves(&SignedGraph::p_l(3), Strategy::Seeded(9)).unwrap(),
            Rational::new(10, 3)
        );
    }

    #[test]
    fn triangulation_of_full_polytope() {
        let t = triangulate(&SignedGraph::p_l(2)).unwrap();
        assert_eq!(t.simplices, alternating_well_structured(2));
        assert_eq!(t.volume, "3");
        assert_eq!(triangulate(&SignedGraph::p_l(3)).unwrap().f, 10);
        let alt = g(2, &[E::x(1, 2), E::z(1)]);
        assert_eq!(triangulate(&alt).unwrap().simplices, vec![alt.clone()]);
        assert!(triangulate(&g(2, &[E::z(1), E::z(2)])).is_err());
    }

    #[test]
    fn node_volumes_add_on_coxeter_graph() {
        let mut cache = VolumeCache::default();
        let root = SignedGraph::p_l(3);
        let mut checks = Vec::new();
        let opts = TreeOptions {
            strategy: Strategy::Seeded(4),
            ..TreeOptions::default()
        };
        walk_tree(&root, opts, &mut |g0, red, kids| {
            let kids: Vec<SignedGraph> = kids.iter().map(|(k, _)| k.clone()).collect();
            checks.push((g0.clone(), *red, kids));
        })
        .unwrap();
        assert!(!checks.is_empty());
        for (g0, red, kids) in checks {
            let c = check_reduction_node(&mut cache, &g0, &red, &kids).unwrap();
            assert!(c.volume_ok && c.rank_ok, "{c:?}");
        }
    }
}
