//! Executable checks of the uniqueness, counting, volume, Ehrhart and
//! Gröbner statements, grouped into suites.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bracket::{
    coxeter_c, coxeter_d, nc_reduce, nc_walk, normal_form, AlgebraMode, NcPolynomial, ReduceOptions,
};
use crate::combinatorics::{binomial, central_binomial_count, factorial, trees_with_root_degree};
use crate::ehrhart::{ehrhart_fit, ehrhart_formula_pl, lattice_count, reciprocity_holds};
use crate::error::{Error, Result};
use crate::grobner::{
    check_grobner_j, check_grobner_j_mutated, check_grobner_y, GrobnerOptions, OverlapShape,
    Reading,
};
use crate::linalg::{rank, rat, Rational};
use crate::notation::parse_word;
use crate::root_geometry::{closure_by_cone, edge_vectors, transitive_closure, vertex_set};
use crate::signed_graph::{
    alternating_well_structured, positive_root_edges, NcWord, SignedEdge, SignedGraph,
};
use crate::strategy::Strategy;
use crate::subdivision::{
    reduced_form, reduced_form_s, walk_tree, CommutativeAlgebra, TreeOptions,
};
use crate::volume::{polytope_volume, VolumeCache};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Suite {
    Conjecture1,
    Conjecture2,
    Volumes,
    Ehrhart,
    Grobner,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Conjecture1,
        Suite::Conjecture2,
        Suite::Volumes,
        Suite::Ehrhart,
        Suite::Grobner,
    ];

    pub fn criteria(self) -> &'static [usize] {
        match self {
            Suite::Conjecture1 => &[1, 2, 3, 11, 12],
            Suite::Conjecture2 => &[9],
            Suite::Volumes => &[4, 5, 6, 7],
            Suite::Ehrhart => &[8],
            Suite::Grobner => &[10],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "conjecture1" => Ok(Suite::Conjecture1),
            "conjecture2" => Ok(Suite::Conjecture2),
            "volumes" => Ok(Suite::Volumes),
            "ehrhart" => Ok(Suite::Ehrhart),
            "grobner" => Ok(Suite::Grobner),
            other => Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("unknown suite `{other}`"),
            }),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Conjecture1 => "conjecture1",
            Suite::Conjecture2 => "conjecture2",
            Suite::Volumes => "volumes",
            Suite::Ehrhart => "ehrhart",
            Suite::Grobner => "grobner",
        })
    }
}

/// Sizes of the verification runs.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Scale {
    pub n_max: usize,
    pub strategies: usize,
    pub random_roots: usize,
    pub random_words: usize,
    pub seed: u64,
}

impl Default for Scale {
    fn default() -> Self {
        Scale {
            n_max: 5,
            strategies: 20,
            random_roots: 30,
            random_words: 50,
            seed: 2024,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {}: {} ({:.2}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.seconds
        )
    }
}

pub const CRITERIA: [&str; 12] = [
    "coxeter top-degree count",
    "coxeter C support",
    "worked reductions",
    "full polytope volume",
    "leaf count order-invariance",
    "volume additivity at nodes",
    "vertex characterization",
    "ehrhart polynomial",
    "type D uniqueness",
    "grobner bases",
    "non-uniqueness witnesses",
    "T(n,k) decomposition",
];

type Node = (SignedGraph, Vec<SignedGraph>);

/// Runs criteria and remembers every reduction-tree node it builds, for the
/// volume additivity check.
#[derive(Debug, Default)]
pub struct Verifier {
    pub scale: Scale,
    nodes: BTreeSet<Node>,
}

impl Verifier {
    pub fn new(scale: Scale) -> Self {
        Verifier {
            scale,
            nodes: BTreeSet::new(),
        }
    }

    pub fn run(&mut self, id: usize) -> CheckResult {
        let start = Instant::now();
        let outcome = match id {
            1 => self.coxeter_count(),
            2 => self.coxeter_support(),
            3 => self.worked_reductions(),
            4 => self.full_volume(),
            5 => self.order_invariance(),
            6 => self.node_additivity(),
            7 => self.vertex_characterization(),
            8 => self.ehrhart(),
            9 => self.d_uniqueness(),
            10 => self.grobner(),
            11 => self.non_uniqueness(),
            12 => self.tree_decomposition(),
            _ => Err(Error::Internal(format!("no criterion {id}"))),
        };
        let seconds = start.elapsed().as_secs_f64();
        let (mut passed, mut detail) = match outcome {
            Ok(v) => v,
            Err(e) => (false, format!("error: {e}")),
        };
        let limit = match id {
            1 => Some(60.0),
            10 => Some(300.0),
            _ => None,
        };
        if let Some(limit) = limit {
            if seconds >= limit {
                passed = false;
                detail.push_str(&format!("; exceeded {limit}s"));
            }
        }
        CheckResult {
            id,
            name: CRITERIA
                .get(id.wrapping_sub(1))
                .copied()
                .unwrap_or("unknown"),
            passed,
            detail,
            seconds,
        }
    }

    pub fn run_suite(&mut self, suite: Suite) -> Vec<CheckResult> {
        suite.criteria().iter().map(|&id| self.run(id)).collect()
    }

    fn record_s_tree(
        &mut self,
        root: &SignedGraph,
        opts: TreeOptions,
    ) -> Result<Vec<(SignedGraph, u32)>> {
        let nodes = &mut self.nodes;
        walk_tree(root, opts, &mut |g, _, kids| {
            nodes.insert((g.clone(), kids.iter().map(|(k, _)| k.clone()).collect()));
        })
    }

    fn record_nc(&mut self, w: &NcWord, opts: ReduceOptions) -> Result<NcPolynomial> {
        let nodes = &mut self.nodes;
        let leaves = nc_walk(w, opts, &mut |g, _, kids| {
            nodes.insert((g.graph(), kids.iter().map(|(k, _)| k.graph()).collect()));
        })?;
        let mut p = NcPolynomial::new(w.n);
        for (leaf, beta) in leaves {
            p.add_word(&leaf, beta, rat(1));
        }
        Ok(p)
    }

    fn range(&self, lo: usize, hi: usize) -> std::ops::RangeInclusive<usize> {
        lo..=hi.min(self.scale.n_max)
    }

    fn coxeter_count(&mut self) -> Result<(bool, String)> {
        let mut ok = true;
        let mut parts = Vec::new();
        for n in self.range(2, 5) {
            let want = central_binomial_count(n as u64) as usize;
            let w = coxeter_c(n)?;
            let opts = TreeOptions {
                algebra: CommutativeAlgebra::Bc,
                ..TreeOptions::default()
            };
            let bc = reduced_form(&w.graph(), opts)?;
            self.record_s_tree(&w.graph(), opts)?;
            let bc_top = bc.terms().filter(|(m, _)| m.graph.len() == n).count();
            let b = self.record_nc(&w, ReduceOptions::new(AlgebraMode::C, Strategy::First))?;
            let b_top = b.count_of_length(n);
            ok &= bc_top == want && b_top == want;
            parts.push(format!("n={n}: B^c {bc_top}, B {b_top}, expected {want}"));
        }
        Ok((ok, parts.join("; ")))
    }

    fn coxeter_support(&mut self) -> Result<(bool, String)> {
        let mut ok = true;
        let mut parts = Vec::new();
        for n in self.range(2, 5) {
            let w = coxeter_c(n)?;
            let want: BTreeSet<NcWord> = alternating_well_structured(n)
                .iter()
                .map(|g| normal_form(&g.lexicographic_labeling()))
                .collect();
            let mut forms = BTreeSet::new();
            let mut support_ok = true;
            for s in Strategy::family(self.scale.strategies) {
                let p = self.record_nc(&w, ReduceOptions::new(AlgebraMode::C, s))?;
                let support: BTreeSet<NcWord> = p.terms().map(|(k, _)| k.word.clone()).collect();
                support_ok &= support == want;
                forms.insert(p.to_string());
            }
            ok &= forms.len() == 1 && support_ok;
            parts.push(format!(
                "n={n}: {} form(s), support {} of {}",
                forms.len(),
                if support_ok { "equal" } else { "differs" },
                want.len()
            ));
        }
        Ok((ok, parts.join("; ")))
    }

    fn worked_reductions(&mut self) -> Result<(bool, String)> {
        let word = |s: &str, n: usize| -> Result<NcWord> { NcWord::new(n, parse_word(s)?.1) };
        let s_root = word("x12 x13 z3", 3)?.graph();
        let s_form = reduced_form_s(&s_root, Strategy::First)?.to_string();
        self.record_s_tree(&s_root, TreeOptions::default())?;
        let s_ok = s_form == "z1 x12 x13 + z1 x12 y13 + x12 y13 z3 + beta z1 x12 + beta x12 y13";
        let c_want = NcPolynomial::parse("z1 x13 x12 + y13 z1 x12 + z3 y13 x12", 3)?;
        let cb_want = NcPolynomial::parse(
            "z2 y12 x23 + z2 y13 y12 + beta z2 y12 + y23 z2 y13 + z3 y23 y13 + beta z2 y13 + beta y23 y13",
            3,
        )?;
        let mut c_ok = true;
        let mut cb_ok = true;
        for s in Strategy::family(6) {
            c_ok &= self.record_nc(
                &word("x13 x12 z3", 3)?,
                ReduceOptions::new(AlgebraMode::C, s),
            )? == c_want;
            cb_ok &= nc_reduce(
                &word("x23 z3 y13", 3)?,
                ReduceOptions::new(AlgebraMode::CBeta, s),
            )? == cb_want;
        }
        Ok((
            s_ok && c_ok && cb_ok,
            format!("x12 x13 z3 in S {s_ok}, x13 x12 z3 in C {c_ok}, x23 z3 y13 in Cb {cb_ok}"),
        ))
    }

    fn full_volume(&mut self) -> Result<(bool, String)> {
        let mut ok = true;
        let mut parts = Vec::new();
        for n in self.range(1, 5) {
            let pl = SignedGraph::p_l(n);
            self.record_s_tree(&pl, TreeOptions::default())?;
            let vol = polytope_volume(&pl)?;
            let want = rat(central_binomial_count(n as u64) as i128 * 2)
                / rat(factorial(n as u64) as i128);
            ok &= vol == want;
            parts.push(format!("n={n}: {vol}"));
        }
        if self.scale.n_max >= 2 {
            let points: Vec<(i64, i64)> = vertex_set(&SignedGraph::p_l(2))
                .iter()
                .map(|v| (v[0], v[1]))
                .chain([(0, 0)])
                .collect();
            let area = hull_area(&points);
            ok &= area == rat(3) && polytope_volume(&SignedGraph::p_l(2))? == area;
            parts.push(format!("shoelace {area}"));
        }
        for n in self.range(1, 3) {
            let lead = ehrhart_fit(&SignedGraph::p_l(n))?.leading();
            ok &= lead == polytope_volume(&SignedGraph::p_l(n))?;
            parts.push(format!("leading(n={n}) {lead}"));
        }
        Ok((ok, parts.join("; ")))
    }

    fn order_invariance(&mut self) -> Result<(bool, String)> {
        let roots = random_l_graphs(
            self.scale.random_roots,
            2,
            self.scale.n_max.max(2),
            self.scale.seed,
        );
        let strategies = Strategy::family(self.scale.strategies.max(10));
        let mut bad = Vec::new();
        for root in &roots {
            let mut counts = BTreeSet::new();
            for &s in &strategies {
                let opts = TreeOptions {
                    strategy: s,
                    ..TreeOptions::default()
                };
                let leaves = self.record_s_tree(root, opts)?;
                counts.insert(leaves.iter().filter(|(l, _)| l.len() == root.len()).count());
            }
            if counts.len() != 1 {
                bad.push(format!("{root:?}: {counts:?}"));
            }
        }
        Ok((
            bad.is_empty() && roots.len() >= self.scale.random_roots,
            format!(
                "{} roots x {} strategies, {} inconsistent{}",
                roots.len(),
                strategies.len(),
                bad.len(),
                bad.first()
                    .map(|b| format!(", first {b}"))
                    .unwrap_or_default()
            ),
        ))
    }

    fn node_additivity(&mut self) -> Result<(bool, String)> {
        if self.nodes.is_empty() {
            for id in [1, 2, 3, 4, 5] {
                self.run(id);
            }
        }
        let mut cache = VolumeCache::default();
        let mut failures = Vec::new();
        for (g0, kids) in &self.nodes {
            let d = g0.len();
            let v0 = cache.volume(g0)?;
            let mut sum = rat(0);
            let mut rank_ok = true;
            for k in kids {
                if k.len() == d {
                    sum += cache.volume(k)?;
                } else {
                    rank_ok &= k.len() + 1 == d && rank(&edge_vectors(k)) + 1 == d;
                }
            }
            if sum != v0 || !rank_ok {
                failures.push(format!("{g0:?}"));
            }
        }
        Ok((
            failures.is_empty(),
            format!(
                "{} nodes, {} failures{}",
                self.nodes.len(),
                failures.len(),
                failures
                    .first()
                    .map(|f| format!(", first {f}"))
                    .unwrap_or_default()
            ),
        ))
    }

    fn vertex_characterization(&mut self) -> Result<(bool, String)> {
        let mut checked = 0usize;
        let mut bad = Vec::new();
        for n in self.range(1, 4) {
            for g in independent_graphs(n, 6) {
                checked += 1;
                let by_routes: BTreeSet<SignedEdge> =
                    transitive_closure(&g).edges().iter().copied().collect();
                let by_cone: BTreeSet<SignedEdge> =
                    closure_by_cone(&g).edges().iter().copied().collect();
                if by_routes != by_cone {
                    bad.push(format!("{g:?}"));
                }
            }
        }
        Ok((
            bad.is_empty(),
            format!(
                "{checked} graphs, {} mismatches{}",
                bad.len(),
                bad.first()
                    .map(|b| format!(", first {b}"))
                    .unwrap_or_default()
            ),
        ))
    }

    fn ehrhart(&mut self) -> Result<(bool, String)> {
        let mut ok = true;
        let mut parts = Vec::new();
        for n in self.range(1, 3) {
            let pl = SignedGraph::p_l(n);
            let formula = ehrhart_formula_pl(n);
            let fit = ehrhart_fit(&pl)?;
            let mut recip = true;
            for t in 1..=4 {
                recip &= reciprocity_holds(&pl, &fit, t)?;
            }
            ok &= formula == fit && recip;
            parts.push(format!(
                "n={n}: {formula}, fit {}, reciprocity {recip}",
                if formula == fit { "equal" } else { "differs" }
            ));
        }
        if self.scale.n_max >= 2 {
            let pl = SignedGraph::p_l(2);
            let (l1, l2) = (lattice_count(&pl, 1, false)?, lattice_count(&pl, 2, false)?);
            ok &= l1 == 7 && l2 == 19;
            parts.push(format!("L(1)={l1}, L(2)={l2}"));
        }
        Ok((ok, parts.join("; ")))
    }

    fn d_uniqueness(&mut self) -> Result<(bool, String)> {
        let strategies = Strategy::family(self.scale.strategies);
        let unique = |w: &NcWord| -> Result<usize> {
            let forms: Vec<NcPolynomial> = strategies
                .par_iter()
                .map(|&s| nc_reduce(w, ReduceOptions::new(AlgebraMode::D, s)))
                .collect::<Result<_>>()?;
            Ok(forms
                .iter()
                .map(|p| p.to_string())
                .collect::<BTreeSet<_>>()
                .len())
        };
        let mut ok = true;
        let mut parts = Vec::new();
        for n in self.range(2, 5) {
            let forms = unique(&coxeter_d(n)?)?;
            ok &= forms == 1;
            parts.push(format!("w_D{n}: {forms} form(s)"));
        }
        let words = random_good_d_words(
            self.scale.random_words,
            self.scale.n_max.clamp(3, 5),
            6,
            self.scale.seed,
        );
        let mut non_unique = 0;
        for w in &words {
            if unique(w)? != 1 {
                non_unique += 1;
            }
        }
        ok &= non_unique == 0 && words.len() >= self.scale.random_words;
        parts.push(format!(
            "{} random good words, {non_unique} non-unique",
            words.len()
        ));
        Ok((ok, parts.join("; ")))
    }

    fn grobner(&mut self) -> Result<(bool, String)> {
        let mut ok = true;
        let mut parts = Vec::new();
        let opts = GrobnerOptions::default();
        for n in self.range(3, 4) {
            let j = check_grobner_j(n, opts)?;
            let bad = j.nonzero().count();
            let y = check_grobner_y(n, Reading::RightToLeft, opts)?;
            let y_ltr = check_grobner_y(n, Reading::LeftToRight, opts)?;
            let mutated = check_grobner_j_mutated(n, opts)?.nonzero().count();
            let adjacent = check_grobner_j(
                n,
                GrobnerOptions {
                    shape: OverlapShape::Adjacent,
                    ..opts
                },
            )?;
            ok &= j.passed && y.passed && y.overlaps.is_empty() && mutated > 0;
            let mut line = format!(
                "n={n}: J {} of {} overlaps nonzero mod Y ({} of {} without separators), Y overlaps {} (right-to-left) / {} (left-to-right), mutation {mutated} nonzero",
                bad,
                j.overlaps.len(),
                adjacent.nonzero().count(),
                adjacent.overlaps.len(),
                y.overlaps.len(),
                y_ltr.overlaps.len()
            );
            if let Some(first) = j.nonzero().next() {
                line.push_str(&format!(
                    " [first: {} x {} by b={}, c={}]",
                    first.f, first.g, first.b, first.c
                ));
            }
            parts.push(line);
        }
        Ok((ok, parts.join("; ")))
    }

    fn non_uniqueness(&mut self) -> Result<(bool, String)> {
        let mut ok = true;
        let mut parts = Vec::new();
        for (text, n) in [("x12 x23 y13", 3), ("y14 x24 y34", 4)] {
            let w = NcWord::new(n, parse_word(text)?.1)?;
            let mut forms = BTreeMap::new();
            for s in Strategy::family(self.scale.strategies) {
                let p = self.record_nc(&w, ReduceOptions::new(AlgebraMode::C, s))?;
                forms.insert(p.to_string(), p);
            }
            let counts: BTreeSet<usize> = forms.values().map(|p| p.at_beta_zero().len()).collect();
            let values: BTreeSet<Rational> =
                forms.values().map(|p| p.evaluate_at_ones(rat(0))).collect();
            ok &= forms.len() >= 2 && counts.len() == 1 && values.len() == 1;
            parts.push(format!(
                "{text}: {} forms, term counts {counts:?}",
                forms.len()
            ));
        }
        Ok((ok, parts.join("; ")))
    }

    fn tree_decomposition(&mut self) -> Result<(bool, String)> {
        let mut ok = true;
        for n in 2..=8u64 {
            let sum: u128 = (1..n)
                .map(|k| trees_with_root_degree(n, k).unwrap_or(0) * ((1u128 << (k + 1)) - 1))
                .sum();
            ok &= sum == central_binomial_count(n);
            let direct: Option<u128> = (1..n)
                .map(|k| {
                    let num = binomial(2 * n - k - 3, n - k - 1) * k as u128;
                    num.is_multiple_of(n as u128 - 1)
                        .then(|| num / (n as u128 - 1))
                })
                .sum();
            ok &= direct.is_some();
        }
        Ok((ok, "n=2..8".into()))
    }
}

/// Area of the convex hull of lattice points in the plane.
pub fn hull_area(points: &[(i64, i64)]) -> Rational {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return rat(0);
    }
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(i64, i64)>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2
                && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    let twice: i64 = (0..hull.len())
        .map(|i| {
            let (a, b) = (hull[i], hull[(i + 1) % hull.len()]);
            a.0 * b.1 - a.1 * b.0
        })
        .sum();
    Rational::new(twice.abs() as i128, 2)
}

/// Distinct random graphs with linearly independent edge vectors.
pub fn random_l_graphs(count: usize, n_min: usize, n_max: usize, seed: u64) -> Vec<SignedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = BTreeSet::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 100 {
        attempts += 1;
        let n = rng.gen_range(n_min..=n_max);
        let target = rng.gen_range(2..=n.max(2));
        let mut edges = positive_root_edges(n);
        edges.shuffle(&mut rng);
        let mut g = SignedGraph::empty(n);
        for e in edges {
            if g.len() == target {
                break;
            }
            let next = g.with(e);
            if next.is_linearly_independent() {
                g = next;
            }
        }
        if g.len() >= 2 {
            out.insert(g);
        }
    }
    out.into_iter().collect()
}

/// Every graph on `[n]` with at most `max_edges` edges whose edge vectors
/// are linearly independent.
pub fn independent_graphs(n: usize, max_edges: usize) -> Vec<SignedGraph> {
    let roots = positive_root_edges(n);
    let mut out = Vec::new();
    let mut stack: Vec<(usize, SignedGraph)> = vec![(0, SignedGraph::empty(n))];
    while let Some((next, g)) = stack.pop() {
        out.push(g.clone());
        if g.len() == max_edges {
            continue;
        }
        for (i, e) in roots.iter().enumerate().skip(next) {
            let h = g.with(*e);
            if h.is_linearly_independent() {
                stack.push((i + 1, h));
            }
        }
    }
    out.sort();
    out
}

/// Distinct random good type D words (by commutation class), grown letter
/// by letter while the word stays good.
pub fn random_good_d_words(count: usize, n_max: usize, max_len: usize, seed: u64) -> Vec<NcWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 200 {
        attempts += 1;
        let n = rng.gen_range(3..=n_max.max(3));
        let len = rng.gen_range(2..=max_len);
        let letters: Vec<SignedEdge> = positive_root_edges(n)
            .into_iter()
            .filter(|e| !e.is_loop())
            .collect();
        let mut w = NcWord {
            n,
            word: Vec::new(),
        };
        while w.len() < len {
            let options: Vec<SignedEdge> = letters
                .iter()
                .filter(|e| {
                    let mut v = w.word.clone();
                    v.push(**e);
                    NcWord { n, word: v }.is_good_d()
                })
                .copied()
                .collect();
            let Some(e) = options.choose(&mut rng) else {
                break;
            };
            w.word.push(*e);
        }
        if w.len() >= 2 && seen.insert(normal_form(&w)) {
            out.push(w);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hull_of_full_square() {
        assert_eq!(
            hull_area(&[(0, 0), (1, -1), (2, 0), (1, 1), (0, 2), (1, 0)]),
            rat(3)
        );
        assert_eq!(hull_area(&[(0, 0), (1, 1)]), rat(0));
    }

    #[test]
    fn generators_are_valid() {
        for g in random_l_graphs(10, 2, 4, 1) {
            assert!(g.is_linearly_independent());
        }
        for w in random_good_d_words(10, 4, 6, 1) {
            assert!(w.is_good_d());
        }
        assert_eq!(independent_graphs(1, 6).len(), 2);
    }

    #[test]
    fn small_scale_criteria() {
        let mut v = Verifier::new(Scale {
            n_max: 3,
            strategies: 6,
            random_roots: 5,
            random_words: 5,
            seed: 3,
        });
        for id in [1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12] {
            let r = v.run(id);
            assert!(r.passed, "{r}");
        }
    }
}
