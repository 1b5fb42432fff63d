//! Signed multigraphs on `[n]`, their edge-labeled (word) variant, and the
//! structural predicates used by the reduction machinery.

mod enumerate;
mod io;
mod predicates;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use enumerate::{
    alternating_well_structured, alternating_wws_subgraphs, positive_root_edges,
    spanning_well_structured, WwsCensus,
};
pub use io::{parse_graph_json, parse_graph_text};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

/// How an edge meets one of the vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Incidence {
    Positive,
    Negative,
    Absent,
}

impl Incidence {
    pub fn value(self) -> i64 {
        match self {
            Incidence::Positive => 1,
            Incidence::Negative => -1,
            Incidence::Absent => 0,
        }
    }

    pub fn flip(self) -> Incidence {
        match self {
            Incidence::Positive => Incidence::Negative,
            Incidence::Negative => Incidence::Positive,
            Incidence::Absent => Incidence::Absent,
        }
    }
}

/// Edge `(lo, hi, sign)` with `lo <= hi`. Loops are always positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedEdge {
    pub lo: usize,
    pub hi: usize,
    pub sign: Sign,
}

impl SignedEdge {
    pub fn new(a: usize, b: usize, sign: Sign) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::VertexOutOfRange {
                vertex: 0,
                n: a.max(b),
            });
        }
        if a == b && sign == Sign::Minus {
            return Err(Error::NegativeLoop(a));
        }
        Ok(SignedEdge {
            lo: a.min(b),
            hi: a.max(b),
            sign,
        })
    }

    /// The negative edge `(i, j, -)`, i.e. the variable `x_ij`.
    pub fn x(i: usize, j: usize) -> Self {
        assert!(
            i != j && i > 0 && j > 0,
            "x needs two distinct positive indices"
        );
        SignedEdge::new(i, j, Sign::Minus).unwrap()
    }

    /// The positive edge `(i, j, +)`, i.e. `y_ij`.
    pub fn y(i: usize, j: usize) -> Self {
        assert!(
            i != j && i > 0 && j > 0,
            "y needs two distinct positive indices"
        );
        SignedEdge::new(i, j, Sign::Plus).unwrap()
    }

    /// The loop `(i, i, +)`, i.e. `z_i`.
    pub fn z(i: usize) -> Self {
        assert!(i > 0);
        SignedEdge::new(i, i, Sign::Plus).unwrap()
    }

    pub fn is_loop(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.sign == Sign::Plus
    }

    pub fn is_negative(&self) -> bool {
        self.sign == Sign::Minus
    }

    pub fn incidence(&self, v: usize) -> Incidence {
        if v == self.lo {
            Incidence::Positive
        } else if v == self.hi {
            match self.sign {
                Sign::Plus => Incidence::Positive,
                Sign::Minus => Incidence::Negative,
            }
        } else {
            Incidence::Absent
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.lo == v || self.hi == v
    }

    pub fn shares_vertex(&self, other: &SignedEdge) -> bool {
        self.touches(other.lo) || self.touches(other.hi)
    }

    /// The endpoint opposite to `v` (for loops, `v` itself).
    pub fn other_end(&self, v: usize) -> usize {
        if v == self.lo {
            self.hi
        } else {
            self.lo
        }
    }

    /// Variable name: `x12`, `y13`, `z3`, or `x_{10,12}` once an index
    /// needs two digits.
    pub fn variable(&self) -> String {
        let letter = match (self.sign, self.is_loop()) {
            (_, true) => 'z',
            (Sign::Minus, false) => 'x',
            (Sign::Plus, false) => 'y',
        };
        if self.is_loop() {
            if self.lo < 10 {
                format!("z{}", self.lo)
            } else {
                format!("z_{{{}}}", self.lo)
            }
        } else if self.hi < 10 {
            format!("{letter}{}{}", self.lo, self.hi)
        } else {
            format!("{letter}_{{{},{}}}", self.lo, self.hi)
        }
    }

    pub fn max_vertex(&self) -> usize {
        self.hi
    }
}

impl fmt::Display for SignedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.lo, self.hi, self.sign.symbol())
    }
}

/// Multigraph on `[n]`; edges kept sorted so equality ignores insertion order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<SignedEdge>,
}

impl SignedGraph {
    pub fn new(n: usize, mut edges: Vec<SignedEdge>) -> Result<Self> {
        for e in &edges {
            if e.hi > n {
                return Err(Error::VertexOutOfRange { vertex: e.hi, n });
            }
        }
        edges.sort();
        Ok(SignedGraph { n, edges })
    }

    pub fn empty(n: usize) -> Self {
        SignedGraph {
            n,
            edges: Vec::new(),
        }
    }

    /// The path `1 - 2 - ... - n` of negative edges with a loop at `n`.
    pub fn p_l(n: usize) -> Self {
        let mut edges: Vec<SignedEdge> = (1..n).map(|i| SignedEdge::x(i, i + 1)).collect();
        edges.push(SignedEdge::z(n));
        SignedGraph::new(n, edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[SignedEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: &SignedEdge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn multiplicity(&self, e: &SignedEdge) -> usize {
        self.edges.iter().filter(|f| *f == e).count()
    }

    /// A copy with one instance of `e` removed, or `None` if absent.
    pub fn without(&self, e: &SignedEdge) -> Option<SignedGraph> {
        let pos = self.edges.binary_search(e).ok()?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        Some(SignedGraph { n: self.n, edges })
    }

    pub fn with(&self, e: SignedEdge) -> SignedGraph {
        let mut edges = self.edges.clone();
        let pos = edges.partition_point(|f| *f <= e);
        edges.insert(pos, e);
        SignedGraph { n: self.n, edges }
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop()).count()
    }

    pub fn has_loop(&self) -> bool {
        self.loop_count() > 0
    }

    /// Component id per vertex (index 0 unused), vertices in the same
    /// component share an id. Isolated vertices are their own component.
    pub fn components(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.n + 1);
        for e in &self.edges {
            uf.union(e.lo, e.hi);
        }
        (0..=self.n).map(|v| uf.find(v)).collect()
    }

    /// Vertices touched by at least one edge, sorted.
    pub fn support(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.edges.iter().flat_map(|e| [e.lo, e.hi]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Monomial in the commuting variables, edges in sorted order.
    pub fn monomial(&self) -> String {
        if self.edges.is_empty() {
            return "1".to_string();
        }
        self.edges
            .iter()
            .map(SignedEdge::variable)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&io::to_text(self))
    }
}

/// Edge-labeled graph: the edge at position `a` (0-based) carries label
/// `a + 1`. Doubles as a noncommutative monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledGraph {
    pub n: usize,
    pub word: Vec<SignedEdge>,
}

pub type NcWord = LabeledGraph;

impl LabeledGraph {
    pub fn new(n: usize, word: Vec<SignedEdge>) -> Result<Self> {
        for e in &word {
            if e.hi > n {
                return Err(Error::VertexOutOfRange { vertex: e.hi, n });
            }
        }
        Ok(LabeledGraph { n, word })
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Forget the labels.
    pub fn graph(&self) -> SignedGraph {
        SignedGraph::new(self.n, self.word.clone()).unwrap()
    }

    pub fn monomial(&self) -> String {
        if self.word.is_empty() {
            return "1".to_string();
        }
        self.word
            .iter()
            .map(SignedEdge::variable)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.monomial())
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(size: usize) -> Self {
        UnionFind {
            parent: (0..size).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_normalizes_endpoints() {
        let e = SignedEdge::new(3, 1, Sign::Minus).unwrap();
        assert_eq!((e.lo, e.hi), (1, 3));
        assert_eq!(
            SignedEdge::new(2, 2, Sign::Minus),
            Err(Error::NegativeLoop(2))
        );
    }

    #[test]
    fn incidence_signs() {
        let x = SignedEdge::x(1, 2);
        assert_eq!(x.incidence(1), Incidence::Positive);
        assert_eq!(x.incidence(2), Incidence::Negative);
        assert_eq!(x.incidence(3), Incidence::Absent);
        assert_eq!(SignedEdge::y(1, 2).incidence(2), Incidence::Positive);
        assert_eq!(SignedEdge::z(3).incidence(3), Incidence::Positive);
    }

    #[test]
    fn variable_names() {
        assert_eq!(SignedEdge::x(1, 2).variable(), "x12");
        assert_eq!(SignedEdge::y(2, 3).variable(), "y23");
        assert_eq!(SignedEdge::z(4).variable(), "z4");
        assert_eq!(SignedEdge::x(10, 12).variable(), "x_{10,12}");
        assert_eq!(SignedEdge::z(11).variable(), "z_{11}");
    }

    #[test]
    fn multiset_edits() {
        let g = SignedGraph::new(3, vec![SignedEdge::x(1, 2), SignedEdge::x(1, 2)]).unwrap();
        assert_eq!(g.multiplicity(&SignedEdge::x(1, 2)), 2);
        let h = g.without(&SignedEdge::x(1, 2)).unwrap();
        assert_eq!(h.len(), 1);
        assert!(h.without(&SignedEdge::z(1)).is_none());
        assert_eq!(h.with(SignedEdge::z(1)).edges()[0], SignedEdge::z(1));
    }

    #[test]
    fn out_of_range_vertex() {
        let err = SignedGraph::new(2, vec![SignedEdge::x(1, 3)]).unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { vertex: 3, n: 2 });
    }
}
