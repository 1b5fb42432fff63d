//! Noncommutative words in `x_ij`, `y_ij`, `z_i` modulo the commutation of
//! letters with disjoint indices, and the type C / type D reduction systems.

mod reduce;
mod rules;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::notation::parse_polynomial;
use crate::signed_graph::{NcWord, SignedEdge};
use crate::subdivision::{format_term, join_terms};

pub use reduce::{
    commutatively_reducible, nc_applicable, nc_reduce, nc_walk, stuck_pairs, NcInstance,
    PriorityReading, ReduceOptions,
};
pub use rules::{nc_rule, AlgebraMode, NcRule};

/// Letters commute when their index sets are disjoint.
pub fn letters_commute(a: &SignedEdge, b: &SignedEdge) -> bool {
    !a.shares_vertex(b)
}

/// Whether the letters at 0-based positions `a` and `a + 1` may be swapped.
pub fn can_commute(w: &NcWord, a: usize) -> bool {
    a + 1 < w.len() && letters_commute(&w.word[a], &w.word[a + 1])
}

pub fn commute(w: &NcWord, a: usize) -> Result<NcWord> {
    if a + 1 >= w.len() {
        return Err(Error::PositionOutOfRange {
            position: a,
            len: w.len(),
        });
    }
    if !can_commute(w, a) {
        return Err(Error::NotCommuting(a));
    }
    let mut out = w.clone();
    out.word.swap(a, a + 1);
    Ok(out)
}

/// Representative of the commutation class chosen greedily: at each step
/// take the best letter (by `better`) among those with no dependent letter
/// before them. Greedy choice yields the lexicographic extreme of the class.
pub fn extreme_form(w: &NcWord, better: impl Fn(&SignedEdge, &SignedEdge) -> bool) -> NcWord {
    let mut rest: Vec<SignedEdge> = w.word.clone();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for k in 0..rest.len() {
            let free = rest[..k].iter().all(|e| letters_commute(e, &rest[k]));
            if free && best.is_none_or(|b| better(&rest[k], &rest[b])) {
                best = Some(k);
            }
        }
        out.push(rest.remove(best.unwrap()));
    }
    NcWord { n: w.n, word: out }
}

/// Lexicographically smallest member of the commutation class.
pub fn normal_form(w: &NcWord) -> NcWord {
    extreme_form(w, |a, b| a < b)
}

/// All members of the commutation class, by breadth-first search over
/// adjacent swaps.
pub fn commutation_class(w: &NcWord) -> BTreeSet<NcWord> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(cur) = queue.pop_front() {
        for a in 0..cur.len().saturating_sub(1) {
            if can_commute(&cur, a) {
                let next = commute(&cur, a).unwrap();
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

pub fn same_class(a: &NcWord, b: &NcWord) -> bool {
    a.n == b.n && normal_form(a) == normal_form(b)
}

/// Type C Coxeter element `x12 x23 ... x_{n-1,n} z_n`.
pub fn coxeter_c(n: usize) -> Result<NcWord> {
    if n < 2 {
        return Err(Error::CoxeterTooSmall(n));
    }
    let mut word: Vec<SignedEdge> = (1..n).map(|i| SignedEdge::x(i, i + 1)).collect();
    word.push(SignedEdge::z(n));
    NcWord::new(n, word)
}

/// Type D Coxeter element `x12 x23 ... x_{n-1,n} y_{n-1,n}`.
pub fn coxeter_d(n: usize) -> Result<NcWord> {
    if n < 2 {
        return Err(Error::CoxeterTooSmall(n));
    }
    let mut word: Vec<SignedEdge> = (1..n).map(|i| SignedEdge::x(i, i + 1)).collect();
    word.push(SignedEdge::y(n - 1, n));
    NcWord::new(n, word)
}

/// Key of a noncommutative term: a normal-form word and a power of β.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NcKey {
    pub word: NcWord,
    pub beta: u32,
}

impl Ord for NcKey {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .word
            .len()
            .cmp(&self.word.len())
            .then_with(|| self.word.word.cmp(&other.word.word))
            .then(self.beta.cmp(&other.beta))
    }
}

impl PartialOrd for NcKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in the partially commutative algebra, keyed by normal forms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NcPolynomial {
    pub n: usize,
    terms: BTreeMap<NcKey, Rational>,
}

impl NcPolynomial {
    pub fn new(n: usize) -> Self {
        NcPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(w: &NcWord) -> Self {
        let mut p = NcPolynomial::new(w.n);
        p.add_word(w, 0, Rational::one());
        p
    }

    pub fn add_word(&mut self, w: &NcWord, beta: u32, c: Rational) {
        let key = NcKey {
            word: normal_form(w),
            beta,
        };
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_assign(&mut self, other: &NcPolynomial) {
        for (k, c) in &other.terms {
            self.add_word(&k.word, k.beta, *c);
        }
    }

    pub fn scaled(&self, c: Rational) -> NcPolynomial {
        let mut out = NcPolynomial::new(self.n);
        if !c.is_zero() {
            for (k, v) in &self.terms {
                out.terms.insert(k.clone(), v * c);
            }
        }
        out
    }

    pub fn sub(&self, other: &NcPolynomial) -> NcPolynomial {
        let mut out = self.clone();
        out.add_assign(&other.scaled(-Rational::one()));
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NcKey, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Forget the β power of every term (β becomes the scalar 1).
    pub fn at_beta_one(&self) -> NcPolynomial {
        let mut out = NcPolynomial::new(self.n);
        for (k, c) in &self.terms {
            out.add_word(&k.word, 0, *c);
        }
        out
    }

    pub fn at_beta_zero(&self) -> NcPolynomial {
        let mut out = NcPolynomial::new(self.n);
        for (k, c) in self.terms.iter().filter(|(k, _)| k.beta == 0) {
            out.add_word(&k.word, 0, *c);
        }
        out
    }

    /// Number of terms whose word has `d` letters.
    pub fn count_of_length(&self, d: usize) -> usize {
        self.terms.keys().filter(|k| k.word.len() == d).count()
    }

    pub fn evaluate_at_ones(&self, beta: Rational) -> Rational {
        self.terms
            .iter()
            .map(|(k, c)| c * num_traits::pow(beta, k.beta as usize))
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn parse(text: &str, n: usize) -> Result<NcPolynomial> {
        let mut p = NcPolynomial::new(n);
        for (c, beta, letters) in parse_polynomial(text)? {
            p.add_word(&NcWord::new(n, letters)?, beta, c);
        }
        Ok(p)
    }
}

impl fmt::Display for NcPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| format_term(c, k.beta, &k.word.monomial()))
            .collect();
        f.write_str(&join_terms(terms))
    }
}

#[derive(Serialize)]
struct NcTermJson {
    coeff: String,
    beta: u32,
    word: String,
}

impl Serialize for NcPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<NcTermJson> = self
            .terms
            .iter()
            .map(|(k, c)| NcTermJson {
                coeff: c.to_string(),
                beta: k.beta,
                word: k.word.monomial(),
            })
            .collect();
        v.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed_graph::SignedEdge as E;

    fn w(n: usize, es: &[E]) -> NcWord {
        NcWord::new(n, es.to_vec()).unwrap()
    }

    #[test]
    fn swaps() {
        assert!(can_commute(&w(4, &[E::x(1, 2), E::x(3, 4)]), 0));
        assert!(!can_commute(&w(3, &[E::x(1, 2), E::x(2, 3)]), 0));
        assert!(can_commute(&w(2, &[E::z(1), E::z(2)]), 0));
        assert!(matches!(
            commute(&w(3, &[E::x(1, 2), E::x(2, 3)]), 0),
            Err(Error::NotCommuting(0))
        ));
        assert!(commute(&w(3, &[E::x(1, 2)]), 0).is_err());
    }

    #[test]
    fn normal_forms() {
        assert_eq!(
            normal_form(&w(4, &[E::x(1, 2), E::x(3, 4)])),
            normal_form(&w(4, &[E::x(3, 4), E::x(1, 2)]))
        );
        let fixed = w(3, &[E::x(2, 3), E::x(1, 2)]);
        assert_eq!(normal_form(&fixed), fixed);
        assert!(same_class(
            &w(3, &[E::z(1), E::x(2, 3), E::z(1)]),
            &w(3, &[E::z(1), E::z(1), E::x(2, 3)])
        ));
    }

    #[test]
    fn normal_form_is_class_minimum() {
        let word = w(
            5,
            &[
                E::x(3, 4),
                E::z(1),
                E::y(2, 5),
                E::x(1, 2),
                E::z(4),
                E::x(3, 5),
            ],
        );
        let class = commutation_class(&word);
        assert_eq!(
            normal_form(&word),
            *class.iter().min_by(|a, b| a.word.cmp(&b.word)).unwrap()
        );
        let max = extreme_form(&word, |a, b| a > b);
        assert_eq!(
            max,
            *class.iter().max_by(|a, b| a.word.cmp(&b.word)).unwrap()
        );
    }

    #[test]
    fn coxeter_elements() {
        assert_eq!(coxeter_c(3).unwrap().monomial(), "x12 x23 z3");
        assert_eq!(coxeter_d(2).unwrap().monomial(), "x12 y12");
        assert!(coxeter_c(1).is_err());
        for n in 2..=6 {
            assert!(coxeter_c(n).unwrap().is_good_c());
            assert!(coxeter_d(n).unwrap().is_good_d());
        }
    }

    #[test]
    fn polynomial_arithmetic() {
        let p = NcPolynomial::parse("x12 x34 + beta x13", 4).unwrap();
        let q = NcPolynomial::parse("x34 x12", 4).unwrap();
        let d = p.sub(&q);
        assert_eq!(d.to_string(), "beta x13");
        assert_eq!(
            p.evaluate_at_ones(Rational::from_integer(2)),
            Rational::from_integer(3)
        );
        assert_eq!(p.at_beta_zero().len(), 1);
        assert!(p.sub(&p).is_zero());
    }
}
