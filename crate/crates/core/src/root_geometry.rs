//! Root vectors of type C, cones over signed graphs, playable routes and
//! pairs, and transitive closure.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::linalg::{is_nonnegative, rank, solve_combination};
use crate::signed_graph::{positive_root_edges, Incidence, SignedEdge, SignedGraph};

pub type RootVector = Vec<i64>;

pub fn edge_vector(e: &SignedEdge, n: usize) -> RootVector {
    assert!(e.hi <= n, "edge {e} outside [1, {n}]");
    let mut v = vec![0; n];
    if e.is_loop() {
        v[e.lo - 1] = 2;
    } else {
        v[e.lo - 1] = 1;
        v[e.hi - 1] = if e.is_positive() { 1 } else { -1 };
    }
    v
}

pub fn edge_vectors(g: &SignedGraph) -> Vec<RootVector> {
    g.edges().iter().map(|e| edge_vector(e, g.n())).collect()
}

/// The edge whose vector is `v`, when `v` is a positive root.
pub fn root_edge(v: &[i64]) -> Option<SignedEdge> {
    let nz: Vec<(usize, i64)> = v
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| (i + 1, x))
        .collect();
    match nz.as_slice() {
        [(i, 2)] => Some(SignedEdge::z(*i)),
        [(i, 1), (j, 1)] => Some(SignedEdge::y(*i, *j)),
        [(i, 1), (j, -1)] => Some(SignedEdge::x(*i, *j)),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    pub generators: Vec<RootVector>,
}

impl Cone {
    pub fn of(g: &SignedGraph) -> Cone {
        Cone {
            generators: edge_vectors(g),
        }
    }

    /// Exact membership: by Carathéodory, `w` lies in the cone iff it is a
    /// nonnegative combination of some linearly independent subset of the
    /// generators, so it suffices to solve on each such subset.
    pub fn contains(&self, w: &[i64]) -> bool {
        if w.iter().all(|&x| x == 0) {
            return true;
        }
        let mut gens = self.generators.clone();
        gens.sort();
        gens.dedup();
        let r = rank(&gens);
        let mut chosen = Vec::new();
        subsets_contain(&gens, 0, r, &mut chosen, w)
    }
}

fn subsets_contain(
    gens: &[RootVector],
    start: usize,
    max: usize,
    chosen: &mut Vec<RootVector>,
    w: &[i64],
) -> bool {
    if !chosen.is_empty() {
        if let Some(c) = solve_combination(chosen, w) {
            if is_nonnegative(&c) {
                return true;
            }
        }
    }
    if chosen.len() == max {
        return false;
    }
    for k in start..gens.len() {
        chosen.push(gens[k].clone());
        if rank(chosen) == chosen.len() && subsets_contain(gens, k + 1, max, chosen, w) {
            return true;
        }
        chosen.pop();
    }
    false
}

pub fn cone_contains(g: &SignedGraph, w: &[i64]) -> bool {
    Cone::of(g).contains(w)
}

/// `Φ⁺ ∩ C(G)` by direct cone membership, as edges in sorted order.
pub fn closure_by_cone(g: &SignedGraph) -> SignedGraph {
    let cone = Cone::of(g);
    let edges = positive_root_edges(g.n())
        .into_iter()
        .filter(|e| cone.contains(&edge_vector(e, g.n())))
        .collect();
    SignedGraph::new(g.n(), edges).unwrap()
}

pub fn vertex_set(g: &SignedGraph) -> Vec<RootVector> {
    edge_vectors(&closure_by_cone(g))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlayableRoute {
    pub start: usize,
    pub end: usize,
    pub edges: Vec<SignedEdge>,
}

impl PlayableRoute {
    pub fn phi(&self, n: usize) -> RootVector {
        let mut v = vec![0; n];
        for e in &self.edges {
            for (x, y) in v.iter_mut().zip(edge_vector(e, n)) {
                *x += y;
            }
        }
        v
    }

    pub fn is_closed(&self) -> bool {
        self.start == self.end
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlayablePair {
    pub first: PlayableRoute,
    pub second: PlayableRoute,
}

impl PlayablePair {
    pub fn phi(&self, n: usize) -> RootVector {
        let a = self.first.phi(n);
        let b = self.second.phi(n);
        a.iter().zip(&b).map(|(x, y)| (x + y) / 2).collect()
    }
}

/// Which closed routes may be paired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PairReading {
    /// Routes closing in different connected components.
    #[default]
    Components,
    /// Any two closed routes at distinct vertices.
    Literal,
}

fn in_phi_plus(start: usize, s0: Incidence, end: usize, s1: Incidence) -> bool {
    use Incidence::*;
    match (start.cmp(&end), s0, s1) {
        (std::cmp::Ordering::Equal, Positive, Positive) => true,
        (std::cmp::Ordering::Equal, _, _) => false,
        (_, Positive, Positive) => true,
        (std::cmp::Ordering::Less, Positive, Negative) => true,
        (std::cmp::Ordering::Greater, Negative, Positive) => true,
        _ => false,
    }
}

/// One shortest playable route per image in `Φ⁺`, ordered by image.
/// Routes may reuse edges; the search runs over states
/// `(vertex, incidence of the last edge there)`.
pub fn playable_routes(g: &SignedGraph) -> Vec<PlayableRoute> {
    let n = g.n();
    let mut best: BTreeMap<SignedEdge, PlayableRoute> = BTreeMap::new();
    for start in 1..=n {
        for s0 in [Incidence::Positive, Incidence::Negative] {
            type State = (usize, Incidence);
            let mut parent: BTreeMap<State, (Option<State>, SignedEdge)> = BTreeMap::new();
            let mut queue = VecDeque::new();
            for e in g.edges() {
                if e.touches(start) && e.incidence(start) == s0 {
                    let w = e.other_end(start);
                    let st = (w, e.incidence(w));
                    if let std::collections::btree_map::Entry::Vacant(slot) = parent.entry(st) {
                        slot.insert((None, *e));
                        queue.push_back(st);
                    }
                }
            }
            while let Some((v, s)) = queue.pop_front() {
                for e in g.edges() {
                    if e.touches(v) && e.incidence(v) == s.flip() {
                        let w = e.other_end(v);
                        let st = (w, e.incidence(w));
                        if let std::collections::btree_map::Entry::Vacant(slot) = parent.entry(st) {
                            slot.insert((Some((v, s)), *e));
                            queue.push_back(st);
                        }
                    }
                }
            }
            for &(end, s1) in parent.keys() {
                if !in_phi_plus(start, s0, end, s1) {
                    continue;
                }
                let mut edges = Vec::new();
                let mut cur = Some((end, s1));
                while let Some(st) = cur {
                    let (prev, e) = parent[&st];
                    edges.push(e);
                    cur = prev;
                }
                edges.reverse();
                let route = PlayableRoute { start, end, edges };
                let image = root_edge(&route.phi(n)).expect("route image is a root");
                let better = match best.get(&image) {
                    None => true,
                    Some(old) => route.edges.len() < old.edges.len(),
                };
                if better {
                    best.insert(image, route);
                }
            }
        }
    }
    best.into_values().collect()
}

/// Pairs of closed routes; one pair per image not already reached by a route.
pub fn playable_pairs(g: &SignedGraph, reading: PairReading) -> Vec<PlayablePair> {
    let n = g.n();
    let routes = playable_routes(g);
    let route_images: BTreeSet<RootVector> = routes.iter().map(|r| r.phi(n)).collect();
    let closed: Vec<&PlayableRoute> = routes.iter().filter(|r| r.is_closed()).collect();
    let comp = g.components();
    let mut out = Vec::new();
    for (a, ra) in closed.iter().enumerate() {
        for rb in &closed[a + 1..] {
            if reading == PairReading::Components && comp[ra.start] == comp[rb.start] {
                continue;
            }
            let pair = PlayablePair {
                first: (*ra).clone(),
                second: (*rb).clone(),
            };
            if !route_images.contains(&pair.phi(n)) {
                out.push(pair);
            }
        }
    }
    out
}

/// Transitive closure from the images of playable routes and pairs.
pub fn transitive_closure(g: &SignedGraph) -> SignedGraph {
    transitive_closure_with(g, PairReading::default())
}

pub fn transitive_closure_with(g: &SignedGraph, reading: PairReading) -> SignedGraph {
    let n = g.n();
    let mut edges: BTreeSet<SignedEdge> = playable_routes(g)
        .iter()
        .filter_map(|r| root_edge(&r.phi(n)))
        .collect();
    edges.extend(
        playable_pairs(g, reading)
            .iter()
            .filter_map(|p| root_edge(&p.phi(n))),
    );
    SignedGraph::new(n, edges.into_iter().collect()).unwrap()
}

/// `P(G)` is a simplex exactly for alternating graphs in `L_n`. Both the
/// structural test and the vertex count test are evaluated and must agree.
pub fn is_simplex(g: &SignedGraph) -> bool {
    let structural = g.is_alternating() && g.is_linearly_independent();
    let independent = rank(&edge_vectors(g)) == g.len();
    let mut distinct = g.edges().to_vec();
    distinct.dedup();
    let geometric = independent && distinct.len() == g.len() && closure_by_cone(g).len() == g.len();
    debug_assert_eq!(structural, geometric, "simplex tests disagree on {g:?}");
    structural
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed_graph::SignedEdge as E;

    fn g(n: usize, es: &[E]) -> SignedGraph {
        SignedGraph::new(n, es.to_vec()).unwrap()
    }

    #[test]
    fn edge_vectors_match_roots() {
        assert_eq!(edge_vector(&E::x(1, 2), 3), vec![1, -1, 0]);
        assert_eq!(edge_vector(&E::y(1, 2), 2), vec![1, 1]);
        assert_eq!(edge_vector(&E::z(2), 2), vec![0, 2]);
        for e in positive_root_edges(4) {
            assert_eq!(root_edge(&edge_vector(&e, 4)), Some(e));
        }
        assert_eq!(root_edge(&[1, 1, 1]), None);
    }

    #[test]
    fn cone_membership() {
        let h = g(2, &[E::x(1, 2), E::z(2)]);
        assert!(cone_contains(&h, &[1, 1]));
        assert!(!cone_contains(&g(2, &[E::x(1, 2)]), &[-1, 1]));
        let pl = SignedGraph::p_l(3);
        for e in positive_root_edges(3) {
            assert!(cone_contains(&pl, &edge_vector(&e, 3)));
        }
    }

    #[test]
    fn dependent_generators() {
        let h = g(2, &[E::x(1, 2), E::y(1, 2), E::z(1), E::z(2)]);
        assert!(cone_contains(&h, &[1, 0]));
        assert!(!cone_contains(&h, &[-1, 0]));
    }

    #[test]
    fn routes_of_small_graphs() {
        let single = playable_routes(&g(2, &[E::x(1, 2)]));
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].phi(2), vec![1, -1]);
        let h = g(2, &[E::x(1, 2), E::z(2)]);
        let images: Vec<RootVector> = playable_routes(&h).iter().map(|r| r.phi(2)).collect();
        assert!(images.contains(&vec![1, 1]));
        // 2e_1 needs the loop twice-removed path x12, z2, x12
        assert!(images.contains(&vec![2, 0]));
        let r = PlayableRoute {
            start: 1,
            end: 3,
            edges: vec![E::x(1, 3), E::z(3)],
        };
        assert_eq!(r.phi(3), vec![1, 0, 1]);
    }

    #[test]
    fn pair_of_two_loops() {
        let h = g(2, &[E::z(1), E::z(2)]);
        let pairs = playable_pairs(&h, PairReading::Components);
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].phi(2), vec![1, 1]);
    }

    #[test]
    fn closure_examples() {
        for n in 1..=4 {
            let full = SignedGraph::new(n, positive_root_edges(n)).unwrap();
            assert_eq!(transitive_closure(&SignedGraph::p_l(n)), full);
        }
        assert!(transitive_closure(&SignedGraph::empty(3)).is_empty());
        let alt = g(3, &[E::x(1, 2), E::x(1, 3), E::z(1)]);
        assert_eq!(transitive_closure(&alt), alt);
        let pl = SignedGraph::p_l(2);
        assert_eq!(
            vertex_set(&pl),
            vec![vec![2, 0], vec![1, -1], vec![1, 1], vec![0, 2]]
        );
    }

    #[test]
    fn closure_is_idempotent() {
        let h = g(3, &[E::x(1, 2), E::y(2, 3)]);
        let c = transitive_closure(&h);
        assert_eq!(transitive_closure(&c), c);
    }

    #[test]
    fn simplex_examples() {
        assert!(is_simplex(&g(2, &[E::x(1, 2), E::z(1)])));
        assert!(!is_simplex(&g(2, &[E::x(1, 2), E::z(2)])));
        assert!(!is_simplex(&g(3, &[E::x(1, 2), E::x(1, 3), E::y(2, 3)])));
    }
}
