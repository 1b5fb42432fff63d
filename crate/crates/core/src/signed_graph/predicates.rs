use std::cmp::Ordering;

use super::{Incidence, LabeledGraph, SignedEdge, SignedGraph, UnionFind};

/// Edges `(i, k)` and `(j, l)` with `i < j < k < l`, in either order.
pub(crate) fn crossing(e: &SignedEdge, f: &SignedEdge) -> bool {
    let c = |a: &SignedEdge, b: &SignedEdge| a.lo < b.lo && b.lo < a.hi && a.hi < b.hi;
    c(e, f) || c(f, e)
}

/// Conditions (ii)-(v) of well-structuredness, checked on one unordered pair.
pub(crate) fn structurally_compatible(e: &SignedEdge, f: &SignedEdge) -> bool {
    if crossing(e, f) {
        return false;
    }
    let pos_nonloop = |a: &SignedEdge| a.is_positive() && !a.is_loop();
    let one_way = |a: &SignedEdge, b: &SignedEdge| {
        // (ii) two positive nonloop edges must interleave
        if pos_nonloop(a) && pos_nonloop(b) && !(a.lo < b.hi && b.lo < a.hi) {
            return false;
        }
        if a.is_loop() {
            let i = a.lo;
            // (iii) a loop lies within the span of every positive edge
            if pos_nonloop(b) && !(b.lo <= i && i <= b.hi) {
                return false;
            }
            // (iv) no negative edge strictly straddles the loop
            if b.is_negative() && b.lo < i && i < b.hi {
                return false;
            }
        }
        // (v) no positive edge nested in a negative one
        if pos_nonloop(a) && b.is_negative() && b.lo <= a.lo && a.hi <= b.hi {
            return false;
        }
        true
    };
    one_way(e, f) && one_way(f, e)
}

/// The label constraint between two labeled edges, if any: `Less` means
/// `e` must carry the smaller label.
pub(crate) fn label_constraint(e: &SignedEdge, f: &SignedEdge) -> Option<Ordering> {
    fn directed(e: &SignedEdge, f: &SignedEdge) -> Option<Ordering> {
        use Ordering::*;
        match (e.is_loop(), f.is_loop()) {
            (false, false) => {
                if e.hi == f.lo {
                    Some(Less)
                } else if (e.lo == f.lo && e.hi < f.hi) || (e.hi == f.hi && e.lo < f.lo) {
                    Some(Greater)
                } else {
                    None
                }
            }
            (true, false) => {
                let v = e.lo;
                match (f.is_negative(), v == f.lo, v == f.hi) {
                    (true, true, _) => Some(Less),
                    (true, _, true) => Some(Greater),
                    (false, true, _) => Some(Greater),
                    (false, _, true) => Some(Less),
                    _ => None,
                }
            }
            _ => None,
        }
    }
    directed(e, f).or_else(|| directed(f, e).map(Ordering::reverse))
}

/// Type D label constraint (negative edges drive every condition).
pub(crate) fn label_constraint_d(e: &SignedEdge, f: &SignedEdge) -> Option<Ordering> {
    fn directed(e: &SignedEdge, f: &SignedEdge) -> Option<Ordering> {
        use Ordering::*;
        if e.is_loop() || f.is_loop() {
            return None;
        }
        if e.is_negative() {
            if e.hi == f.lo {
                return Some(Less);
            }
            if e.lo == f.lo && e.hi < f.hi {
                return Some(Greater);
            }
            if e.hi == f.hi && f.lo < e.lo {
                return Some(Less);
            }
            if f.is_positive() && e.lo < f.lo && f.lo < e.hi && e.hi < f.hi {
                return Some(Greater);
            }
        } else if f.is_negative() && e.hi == f.hi && f.lo < e.lo {
            return Some(Greater);
        }
        None
    }
    directed(e, f).or_else(|| directed(f, e).map(Ordering::reverse))
}

fn respects(
    word: &[SignedEdge],
    rule: impl Fn(&SignedEdge, &SignedEdge) -> Option<Ordering>,
) -> bool {
    for a in 0..word.len() {
        for b in a + 1..word.len() {
            if let Some(ord) = rule(&word[a], &word[b]) {
                if ord != Ordering::Less {
                    return false;
                }
            }
        }
    }
    true
}

/// Total order used for lexicographic labels: positive edges first, then
/// by larger `hi`, then larger `lo`.
pub(crate) fn lexicographic_cmp(e: &SignedEdge, f: &SignedEdge) -> Ordering {
    f.sign
        .cmp(&e.sign)
        .then(f.hi.cmp(&e.hi))
        .then(f.lo.cmp(&e.lo))
}

impl SignedGraph {
    pub fn is_alternating(&self) -> bool {
        let mut seen = vec![Incidence::Absent; self.n() + 1];
        for e in self.edges() {
            for v in [e.lo, e.hi] {
                let s = e.incidence(v);
                match seen[v] {
                    Incidence::Absent => seen[v] = s,
                    t if t != s => return false,
                    _ => {}
                }
            }
        }
        true
    }

    pub fn is_noncrossing(&self) -> bool {
        let es = self.edges();
        (0..es.len()).all(|a| (a + 1..es.len()).all(|b| !crossing(&es[a], &es[b])))
    }

    /// Membership in `L_n`: every component is a tree, or has exactly one
    /// cycle carrying an odd number of positive edges (a loop counts).
    pub fn is_linearly_independent(&self) -> bool {
        let n = self.n();
        let comp = self.components();
        let mut vertices = vec![0usize; n + 1];
        let mut edges = vec![0usize; n + 1];
        for v in 1..=n {
            vertices[comp[v]] += 1;
        }
        for e in self.edges() {
            edges[comp[e.lo]] += 1;
        }
        if (1..=n).any(|c| edges[c] > vertices[c]) {
            return false;
        }
        // Strip leaves; what remains is the union of the unique cycles.
        let mut alive = vec![true; self.len()];
        let mut degree = vec![0usize; n + 1];
        for e in self.edges() {
            degree[e.lo] += 1;
            degree[e.hi] += 1;
        }
        loop {
            let mut changed = false;
            for (k, e) in self.edges().iter().enumerate() {
                if alive[k] && !e.is_loop() && (degree[e.lo] == 1 || degree[e.hi] == 1) {
                    alive[k] = false;
                    degree[e.lo] -= 1;
                    degree[e.hi] -= 1;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let mut positives = vec![0usize; n + 1];
        for (k, e) in self.edges().iter().enumerate() {
            if alive[k] && e.is_positive() {
                positives[comp[e.lo]] += 1;
            }
        }
        (1..=n)
            .filter(|&c| edges[c] == vertices[c] && edges[c] > 0)
            .all(|c| positives[c] % 2 == 1)
    }

    fn nonloop_forest(&self) -> bool {
        let mut uf = UnionFind::new(self.n() + 1);
        self.edges()
            .iter()
            .filter(|e| !e.is_loop())
            .all(|e| uf.union(e.lo, e.hi))
    }

    fn pairwise_structured(&self) -> bool {
        let es = self.edges();
        (0..es.len()).all(|a| (a + 1..es.len()).all(|b| structurally_compatible(&es[a], &es[b])))
    }

    pub fn is_well_structured(&self) -> bool {
        let n = self.n();
        if n == 0 || self.loop_count() != 1 || self.len() != n || !self.nonloop_forest() {
            return false;
        }
        // n - 1 acyclic nonloop edges on n vertices span a tree.
        self.pairwise_structured()
    }

    pub fn is_weakly_well_structured(&self) -> bool {
        self.len() <= self.n()
            && self.loop_count() <= 1
            && self.nonloop_forest()
            && self.edges().iter().any(|e| e.is_positive() && e.lo == 1)
            && self.pairwise_structured()
    }

    pub fn lexicographic_labeling(&self) -> LabeledGraph {
        let mut word = self.edges().to_vec();
        word.sort_by(lexicographic_cmp);
        LabeledGraph { n: self.n(), word }
    }
}

impl LabeledGraph {
    pub fn is_well_labeled(&self) -> bool {
        respects(&self.word, label_constraint)
    }

    pub fn is_good_c(&self) -> bool {
        self.graph().is_well_structured() && self.is_well_labeled()
    }

    pub fn is_good_d(&self) -> bool {
        if self.word.iter().any(SignedEdge::is_loop) {
            return false;
        }
        let negatives: Vec<&SignedEdge> = self.word.iter().filter(|e| e.is_negative()).collect();
        for a in 0..negatives.len() {
            for b in a + 1..negatives.len() {
                if crossing(negatives[a], negatives[b]) {
                    return false;
                }
            }
        }
        respects(&self.word, label_constraint_d)
    }

    pub fn is_lexicographic(&self) -> bool {
        self.word
            .windows(2)
            .all(|w| lexicographic_cmp(&w[0], &w[1]) != Ordering::Greater)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;
    use crate::root_geometry::edge_vector;
    use crate::signed_graph::SignedEdge as E;

    fn g(n: usize, es: &[E]) -> SignedGraph {
        SignedGraph::new(n, es.to_vec()).unwrap()
    }

    fn w(n: usize, es: &[E]) -> LabeledGraph {
        LabeledGraph::new(n, es.to_vec()).unwrap()
    }

    #[test]
    fn alternation() {
        assert!(g(2, &[E::x(1, 2), E::z(1)]).is_alternating());
        assert!(!g(2, &[E::x(1, 2), E::z(2)]).is_alternating());
        assert!(SignedGraph::empty(3).is_alternating());
    }

    #[test]
    fn crossing_pairs() {
        assert!(!g(4, &[E::x(1, 3), E::y(2, 4)]).is_noncrossing());
        assert!(g(4, &[E::x(1, 4), E::y(2, 3)]).is_noncrossing());
        assert!(g(4, &[E::x(1, 3)]).is_noncrossing());
    }

    #[test]
    fn independence_examples() {
        assert!(SignedGraph::p_l(4).is_linearly_independent());
        assert!(!g(3, &[E::x(1, 2), E::x(2, 3), E::x(1, 3)]).is_linearly_independent());
        assert!(g(3, &[E::x(1, 2), E::x(2, 3), E::y(1, 3)]).is_linearly_independent());
        assert!(g(2, &[E::x(1, 2), E::y(1, 2)]).is_linearly_independent());
        assert!(!g(2, &[E::x(1, 2), E::x(1, 2)]).is_linearly_independent());
        assert!(!g(2, &[E::z(1), E::z(1)]).is_linearly_independent());
        assert!(g(4, &[E::x(1, 2), E::x(3, 4)]).is_linearly_independent());
    }

    #[test]
    fn independence_agrees_with_rank_on_all_small_multigraphs() {
        let n = 3;
        let mut roots = Vec::new();
        for i in 1..=n {
            roots.push(E::z(i));
            for j in i + 1..=n {
                roots.push(E::x(i, j));
                roots.push(E::y(i, j));
            }
        }
        // every multiset of up to 4 roots
        let mut stack: Vec<(usize, Vec<E>)> = vec![(0, Vec::new())];
        while let Some((start, es)) = stack.pop() {
            let graph = g(n, &es);
            let vecs: Vec<Vec<i64>> = es.iter().map(|e| edge_vector(e, n)).collect();
            assert_eq!(
                graph.is_linearly_independent(),
                rank(&vecs) == es.len(),
                "{graph:?}"
            );
            if es.len() < 4 {
                for (k, root) in roots.iter().enumerate().skip(start) {
                    let mut next = es.clone();
                    next.push(*root);
                    stack.push((k, next));
                }
            }
        }
    }

    #[test]
    fn well_structured_examples() {
        assert!(SignedGraph::p_l(4).is_well_structured());
        assert!(g(2, &[E::y(1, 2), E::z(2)]).is_well_structured());
        let h = g(2, &[E::x(1, 2), E::z(2)]);
        assert!(h.is_well_structured() && !h.is_alternating());
        // condition (iv): loop strictly inside a negative edge
        assert!(!g(3, &[E::x(1, 3), E::z(2), E::x(1, 2)]).is_well_structured());
        // two loops
        assert!(!g(2, &[E::z(1), E::z(2)]).is_well_structured());
    }

    #[test]
    fn weakly_well_structured_examples() {
        assert!(g(2, &[E::z(1)]).is_weakly_well_structured());
        assert!(!g(2, &[E::z(2)]).is_weakly_well_structured());
        assert!(!g(2, &[E::x(1, 2)]).is_weakly_well_structured());
        assert!(g(2, &[E::y(1, 2), E::z(2)]).is_weakly_well_structured());
    }

    #[test]
    fn well_labeled_examples() {
        assert!(w(3, &[E::x(1, 2), E::x(2, 3), E::z(3)]).is_well_labeled());
        assert!(!w(3, &[E::x(2, 3), E::x(1, 2)]).is_well_labeled());
        assert!(w(3, &[]).is_well_labeled());
    }

    #[test]
    fn good_d_examples() {
        assert!(w(3, &[E::x(1, 2), E::x(2, 3), E::y(2, 3)]).is_good_d());
        assert!(!w(3, &[E::x(1, 2), E::y(1, 3), E::y(1, 2)]).is_good_d());
        assert!(!w(3, &[E::x(2, 3), E::x(1, 2)]).is_good_d());
    }

    #[test]
    fn lexicographic_examples() {
        let lg = g(3, &[E::x(1, 2), E::x(1, 3), E::z(1)]).lexicographic_labeling();
        assert_eq!(lg.word, vec![E::z(1), E::x(1, 3), E::x(1, 2)]);
        assert!(lg.is_lexicographic());
        assert_eq!(
            g(3, &[E::z(3)]).lexicographic_labeling().word,
            vec![E::z(3)]
        );
        assert!(!w(3, &[E::x(1, 2), E::z(1)]).is_lexicographic());
    }
}
