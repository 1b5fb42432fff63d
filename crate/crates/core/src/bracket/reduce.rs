use serde::Serialize;

use super::rules::{nc_rhs, nc_rule, AlgebraMode, NcRule};
use super::{letters_commute, NcPolynomial};
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::signed_graph::{NcWord, SignedEdge};
use crate::strategy::Strategy;

/// Reading of the priority condition between reductions sharing a letter.
///
/// A reduction on letters at positions `p < q` competes with reductions of
/// one of them against a letter `r` strictly between. `AsWritten` lets the
/// earlier letter's nearer partner win (labels `a1 < a2 < a3` with the shared
/// letter smallest); `Mirrored` applies the same rule with the shared letter
/// carrying the largest label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub enum PriorityReading {
    Off,
    #[default]
    AsWritten,
    Mirrored,
    Both,
}

impl std::str::FromStr for PriorityReading {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "off" => Ok(PriorityReading::Off),
            "as-written" => Ok(PriorityReading::AsWritten),
            "mirrored" => Ok(PriorityReading::Mirrored),
            "both" => Ok(PriorityReading::Both),
            other => Err(format!("unknown priority reading `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReduceOptions {
    pub mode: AlgebraMode,
    pub strategy: Strategy,
    pub priority: PriorityReading,
    pub max_nodes: usize,
}

impl ReduceOptions {
    pub fn new(mode: AlgebraMode, strategy: Strategy) -> Self {
        ReduceOptions {
            mode,
            strategy,
            priority: PriorityReading::default(),
            max_nodes: 2_000_000,
        }
    }
}

/// A rule instance on the letters at positions `p < q`, together with the
/// commuted word in which they sit at `at`, `at + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NcInstance {
    pub rule: NcRule,
    pub p: usize,
    pub q: usize,
    pub adjacent: Vec<SignedEdge>,
    pub at: usize,
}

/// Whether the pair reduces in the commutative image of the algebra.
pub fn commutatively_reducible(a: &SignedEdge, b: &SignedEdge, mode: AlgebraMode) -> bool {
    nc_rule(a, b, mode).is_some() || nc_rule(b, a, mode).is_some()
}

/// Brings positions `p < q` together, or returns `None` if a chain of
/// non-commuting letters links them.
fn make_adjacent(word: &[SignedEdge], p: usize, q: usize) -> Option<(Vec<SignedEdge>, usize)> {
    let mut dragged = vec![p];
    let mut left = Vec::new();
    for r in p + 1..q {
        if dragged
            .iter()
            .any(|&d| !letters_commute(&word[d], &word[r]))
        {
            if !letters_commute(&word[r], &word[q]) {
                return None;
            }
            dragged.push(r);
        } else {
            left.push(r);
        }
    }
    let mut out: Vec<SignedEdge> = word[..p].to_vec();
    out.extend(left.iter().map(|&r| word[r]));
    let at = out.len();
    out.push(word[p]);
    out.push(word[q]);
    out.extend(dragged[1..].iter().map(|&r| word[r]));
    out.extend_from_slice(&word[q + 1..]);
    Some((out, at))
}

fn suppressed(
    word: &[SignedEdge],
    p: usize,
    q: usize,
    mode: AlgebraMode,
    reading: PriorityReading,
) -> bool {
    let competes = |s: usize| (p + 1..q).any(|r| commutatively_reducible(&word[s], &word[r], mode));
    match reading {
        PriorityReading::Off => false,
        PriorityReading::AsWritten => competes(p),
        PriorityReading::Mirrored => competes(q),
        PriorityReading::Both => competes(p) || competes(q),
    }
}

/// Rule instances reachable by commutations, after the priority filter,
/// ordered by position.
pub fn nc_applicable(w: &NcWord, mode: AlgebraMode, reading: PriorityReading) -> Vec<NcInstance> {
    let word = &w.word;
    let mut out = Vec::new();
    for p in 0..word.len() {
        for q in p + 1..word.len() {
            let Some(rule) = nc_rule(&word[p], &word[q], mode) else {
                continue;
            };
            let Some((adjacent, at)) = make_adjacent(word, p, q) else {
                continue;
            };
            if suppressed(word, p, q, mode, reading) {
                continue;
            }
            out.push(NcInstance {
                rule,
                p,
                q,
                adjacent,
                at,
            });
        }
    }
    out
}

/// Pairs that would reduce commutatively but admit no noncommutative move.
pub fn stuck_pairs(w: &NcWord, mode: AlgebraMode) -> Vec<(usize, usize)> {
    let word = &w.word;
    let mut out = Vec::new();
    for p in 0..word.len() {
        for q in p + 1..word.len() {
            if commutatively_reducible(&word[p], &word[q], mode)
                && !(nc_rule(&word[p], &word[q], mode).is_some()
                    && make_adjacent(word, p, q).is_some())
            {
                out.push((p, q));
            }
        }
    }
    out
}

fn children(w: &NcWord, inst: &NcInstance, mode: AlgebraMode) -> Vec<(NcWord, u32)> {
    let a = &inst.adjacent;
    nc_rhs(inst.rule, &a[inst.at], &a[inst.at + 1], mode)
        .into_iter()
        .map(|(letters, b)| {
            let mut out = a[..inst.at].to_vec();
            out.extend(letters);
            out.extend_from_slice(&a[inst.at + 2..]);
            (NcWord { n: w.n, word: out }, b)
        })
        .collect()
}

pub type NcVisitor<'a> = dyn FnMut(&NcWord, &NcInstance, &[(NcWord, u32)]) + 'a;

/// Depth-first reduction; returns the leaves with their β powers.
pub fn nc_walk(
    w: &NcWord,
    opts: ReduceOptions,
    visit: &mut NcVisitor<'_>,
) -> Result<Vec<(NcWord, u32)>> {
    let mut chooser = opts.strategy.chooser();
    let mut leaves = Vec::new();
    let mut stack = vec![(w.clone(), 0u32)];
    let mut nodes = 0usize;
    while let Some((word, beta)) = stack.pop() {
        nodes += 1;
        if nodes > opts.max_nodes {
            return Err(Error::GuardExceeded {
                what: "tree nodes",
                value: nodes as u128,
                limit: opts.max_nodes as u128,
            });
        }
        let options = nc_applicable(&word, opts.mode, opts.priority);
        if options.is_empty() {
            leaves.push((word, beta));
            continue;
        }
        let inst = &options[chooser.pick(options.len())];
        let kids: Vec<(NcWord, u32)> = children(&word, inst, opts.mode)
            .into_iter()
            .map(|(c, b)| (c, beta + b))
            .collect();
        visit(&word, inst, &kids);
        stack.extend(kids.into_iter().rev());
    }
    Ok(leaves)
}

pub fn nc_reduce(w: &NcWord, opts: ReduceOptions) -> Result<NcPolynomial> {
    let leaves = nc_walk(w, opts, &mut |_, _, _| {})?;
    let mut p = NcPolynomial::new(w.n);
    for (leaf, beta) in &leaves {
        p.add_word(leaf, *beta, Rational::from_integer(1));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::{coxeter_c, same_class};
    use crate::signed_graph::SignedEdge as E;

    fn w(n: usize, es: &[E]) -> NcWord {
        NcWord::new(n, es.to_vec()).unwrap()
    }

    fn reduce(word: &NcWord, mode: AlgebraMode, strategy: Strategy) -> NcPolynomial {
        nc_reduce(word, ReduceOptions::new(mode, strategy)).unwrap()
    }

    #[test]
    fn adjacency_through_commuting_letters() {
        let word = [E::x(1, 3), E::x(1, 2), E::z(3)];
        let (adj, at) = make_adjacent(&word, 0, 2).unwrap();
        assert_eq!(adj, vec![E::x(1, 3), E::z(3), E::x(1, 2)]);
        assert_eq!(at, 0);
        let blocked = [E::x(1, 2), E::x(2, 3), E::z(3)];
        assert!(make_adjacent(&blocked, 0, 2).is_none());
        let chain = [E::x(1, 3), E::y(1, 2), E::x(2, 3)];
        assert!(make_adjacent(&chain, 0, 2).is_none());
    }

    #[test]
    fn c_reduction_of_x13_x12_z3() {
        let root = w(3, &[E::x(1, 3), E::x(1, 2), E::z(3)]);
        let got = reduce(&root, AlgebraMode::C, Strategy::First);
        let want = NcPolynomial::parse("z1 x13 x12 + y13 z1 x12 + z3 y13 x12", 3).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn cbeta_reduction_of_x23_z3_y13() {
        let root = w(3, &[E::x(2, 3), E::z(3), E::y(1, 3)]);
        let want = NcPolynomial::parse(
            "z2 y12 x23 + z2 y13 y12 + beta z2 y12 + y23 z2 y13 + z3 y23 y13 + beta z2 y13 + beta y23 y13",
            3,
        )
        .unwrap();
        for s in Strategy::family(6) {
            assert_eq!(reduce(&root, AlgebraMode::CBeta, s), want);
        }
    }

    #[test]
    fn coxeter_three_worked_example() {
        let got = reduce(&coxeter_c(3).unwrap(), AlgebraMode::C, Strategy::First);
        let want = NcPolynomial::parse(
            "z1 x13 x12 + y13 z1 x12 + z3 y13 x12 + x23 z1 x13 + y12 x23 z1 + y13 y12 z1 \
             + z2 y12 x23 + z2 y13 y12 + y23 z2 y13 + z3 y23 y13",
            3,
        )
        .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn non_unique_witness() {
        let root = w(3, &[E::x(1, 2), E::x(2, 3), E::y(1, 3)]);
        let a = reduce(&root, AlgebraMode::C, Strategy::First);
        let b = reduce(&root, AlgebraMode::C, Strategy::Last);
        assert_eq!(
            a,
            NcPolynomial::parse("x13 x12 y13 + x23 x13 y13", 3).unwrap()
        );
        assert_eq!(
            b,
            NcPolynomial::parse("x12 y12 x23 + x12 y13 y12", 3).unwrap()
        );
    }

    #[test]
    fn alternating_good_word_is_fixed() {
        let word = w(3, &[E::z(1), E::x(1, 3), E::x(1, 2)]);
        assert!(nc_applicable(&word, AlgebraMode::C, PriorityReading::AsWritten).is_empty());
        assert!(same_class(&word, &word));
    }

    #[test]
    fn stuck_pair_detection() {
        let chain = w(3, &[E::x(1, 3), E::y(2, 3), E::z(3)]);
        assert!(stuck_pairs(&chain, AlgebraMode::C).contains(&(0, 2)));
        assert!(stuck_pairs(&coxeter_c(3).unwrap(), AlgebraMode::C).is_empty());
    }
}
