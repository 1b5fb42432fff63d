use serde::Serialize;

use super::predicates::structurally_compatible;
use super::{Incidence, SignedEdge, SignedGraph, UnionFind};

/// All edges of `Φ⁺` on `[n]`, sorted.
pub fn positive_root_edges(n: usize) -> Vec<SignedEdge> {
    let mut out = Vec::new();
    for i in 1..=n {
        out.push(SignedEdge::z(i));
        for j in i + 1..=n {
            out.push(SignedEdge::x(i, j));
            out.push(SignedEdge::y(i, j));
        }
    }
    out.sort();
    out
}

struct Search<'a> {
    n: usize,
    candidates: &'a [SignedEdge],
    max_edges: usize,
    chosen: Vec<SignedEdge>,
    out: Vec<SignedGraph>,
}

impl Search<'_> {
    /// Depth-first over increasing candidate indices, keeping only
    /// alternating, pairwise structured, loop-free-cycle choices.
    fn run(&mut self, start: usize, accept: &dyn Fn(&SignedGraph) -> bool) {
        let g = SignedGraph::new(self.n, self.chosen.clone()).unwrap();
        if accept(&g) {
            self.out.push(g);
        }
        if self.chosen.len() == self.max_edges {
            return;
        }
        for k in start..self.candidates.len() {
            let e = self.candidates[k];
            if self.fits(&e) {
                self.chosen.push(e);
                self.run(k + 1, accept);
                self.chosen.pop();
            }
        }
    }

    fn fits(&self, e: &SignedEdge) -> bool {
        if e.is_loop() && self.chosen.iter().any(SignedEdge::is_loop) {
            return false;
        }
        for f in &self.chosen {
            if !structurally_compatible(e, f) {
                return false;
            }
            for v in [e.lo, e.hi] {
                let s = f.incidence(v);
                if s != Incidence::Absent && s != e.incidence(v) {
                    return false;
                }
            }
        }
        if !e.is_loop() {
            let mut uf = UnionFind::new(self.n + 1);
            for f in self.chosen.iter().filter(|f| !f.is_loop()) {
                uf.union(f.lo, f.hi);
            }
            if !uf.union(e.lo, e.hi) {
                return false;
            }
        }
        true
    }
}

fn search(
    n: usize,
    candidates: &[SignedEdge],
    accept: &dyn Fn(&SignedGraph) -> bool,
) -> Vec<SignedGraph> {
    let mut sorted = candidates.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut s = Search {
        n,
        candidates: &sorted,
        max_edges: n,
        chosen: Vec::new(),
        out: Vec::new(),
    };
    s.run(0, accept);
    s.out.sort();
    s.out
}

/// Alternating well-structured graphs on `[n]`, in lexicographic order of
/// their sorted edge lists.
pub fn alternating_well_structured(n: usize) -> Vec<SignedGraph> {
    spanning_well_structured(n, &positive_root_edges(n))
}

/// Alternating well-structured graphs on `[n]` whose edges all come from
/// `available` (typically the transitive closure of a root graph).
pub fn spanning_well_structured(n: usize, available: &[SignedEdge]) -> Vec<SignedGraph> {
    search(n, available, &|g| g.len() == n && g.is_well_structured())
}

/// Alternating weakly-well-structured graphs on `[n]`.
pub fn alternating_wws_subgraphs(n: usize) -> Vec<SignedGraph> {
    search(n, &positive_root_edges(n), &|g| {
        !g.is_empty() && g.is_weakly_well_structured()
    })
}

/// Counts of alternating weakly-well-structured graphs by edge count,
/// split by whether a loop is present. Index `d` holds graphs with `d` edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WwsCensus {
    pub n: usize,
    pub with_loop: Vec<u64>,
    pub without_loop: Vec<u64>,
}

impl WwsCensus {
    pub fn of(n: usize) -> WwsCensus {
        WwsCensus::from_graphs(n, &alternating_wws_subgraphs(n))
    }

    /// Loopless graphs with `n` edges; expected to be zero.
    pub fn loopless_full(&self) -> u64 {
        self.without_loop[self.n]
    }

    pub fn from_graphs(n: usize, graphs: &[SignedGraph]) -> WwsCensus {
        let mut with_loop = vec![0; n + 1];
        let mut without_loop = vec![0; n + 1];
        for g in graphs {
            if g.has_loop() {
                with_loop[g.len()] += 1;
            } else {
                without_loop[g.len()] += 1;
            }
        }
        WwsCensus {
            n,
            with_loop,
            without_loop,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::central_binomial_count;
    use crate::signed_graph::SignedEdge as E;

    #[test]
    fn two_vertices() {
        let gs = alternating_well_structured(2);
        let expected: Vec<SignedGraph> = vec![
            vec![E::z(1), E::x(1, 2)],
            vec![E::z(1), E::y(1, 2)],
            vec![E::y(1, 2), E::z(2)],
        ]
        .into_iter()
        .map(|es| SignedGraph::new(2, es).unwrap())
        .collect();
        let mut sorted = expected.clone();
        sorted.sort();
        assert_eq!(gs, sorted);
    }

    #[test]
    fn counts_match_binomial() {
        for n in 1..=6u64 {
            assert_eq!(
                alternating_well_structured(n as usize).len() as u128,
                central_binomial_count(n)
            );
        }
    }

    #[test]
    fn census_small() {
        let c = WwsCensus::of(2);
        assert_eq!(c.with_loop, vec![0, 1, 3]);
        assert_eq!(c.without_loop, vec![0, 1, 0]);
        let c = WwsCensus::of(1);
        assert_eq!(c.with_loop, vec![0, 1]);
        assert_eq!(c.without_loop, vec![0, 0]);
    }

    #[test]
    fn top_loop_graphs_are_the_well_structured_ones() {
        for n in 1..=4 {
            let c = WwsCensus::of(n);
            assert_eq!(
                c.with_loop[n] as usize,
                alternating_well_structured(n).len()
            );
            assert_eq!(c.loopless_full(), 0);
        }
    }
}
