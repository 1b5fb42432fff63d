use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::bracket::{commutation_class, NcPolynomial};
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::signed_graph::{NcWord, SignedEdge};
use crate::subdivision::{format_term, join_terms};

use super::order::{OrderContext, SortKey};

#[derive(Debug, Clone, PartialEq, Eq)]
struct Entry {
    word: NcWord,
    coeffs: BTreeMap<u32, Rational>,
}

/// Polynomial over `Q[β]` whose words are stored as canonical
/// representatives under an [`OrderContext`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedNcPoly {
    ctx: OrderContext,
    terms: BTreeMap<SortKey, Entry>,
}

/// Largest word of a polynomial with the coefficient of its lowest power of β.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tip {
    pub word: NcWord,
    pub beta: u32,
    pub coeff: Rational,
}

impl OrderedNcPoly {
    pub fn zero(ctx: OrderContext) -> Self {
        OrderedNcPoly {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<'a>(
        ctx: OrderContext,
        terms: impl IntoIterator<Item = (Rational, u32, &'a [SignedEdge])>,
    ) -> Self {
        let mut p = OrderedNcPoly::zero(ctx);
        for (c, beta, word) in terms {
            p.add_term(word, beta, c);
        }
        p
    }

    pub fn from_nc(p: &NcPolynomial, ctx: OrderContext) -> Self {
        let mut out = OrderedNcPoly::zero(ctx);
        for (k, c) in p.terms() {
            out.add_term(&k.word.word, k.beta, *c);
        }
        out
    }

    pub fn to_nc(&self) -> NcPolynomial {
        let mut out = NcPolynomial::new(self.ctx.n);
        for (w, b, c) in self.terms() {
            out.add_word(w, b, *c);
        }
        out
    }

    /// The same polynomial recanonicalized under another order.
    pub fn reorder(&self, ctx: OrderContext) -> Self {
        let mut out = OrderedNcPoly::zero(ctx);
        for (w, b, c) in self.terms() {
            out.add_term(&w.word, b, *c);
        }
        out
    }

    pub fn ctx(&self) -> OrderContext {
        self.ctx
    }

    pub fn add_term(&mut self, word: &[SignedEdge], beta: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let w = NcWord {
            n: self.ctx.n,
            word: word.to_vec(),
        };
        let canon = self.ctx.canonical_rep(&w);
        let key = self.ctx.key_of_canonical(&canon.word);
        let entry = self.terms.entry(key.clone()).or_insert_with(|| Entry {
            word: canon,
            coeffs: BTreeMap::new(),
        });
        let slot = entry.coeffs.entry(beta).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            entry.coeffs.remove(&beta);
            if entry.coeffs.is_empty() {
                self.terms.remove(&key);
            }
        }
    }

    /// Adds `c β^shift · left · other · right`.
    pub fn add_product(
        &mut self,
        left: &[SignedEdge],
        other: &OrderedNcPoly,
        right: &[SignedEdge],
        c: Rational,
        shift: u32,
    ) {
        for (w, b, x) in other.terms() {
            let word: Vec<SignedEdge> = left.iter().chain(&w.word).chain(right).copied().collect();
            self.add_term(&word, b + shift, x * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.values().map(|e| e.coeffs.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Terms from largest to smallest.
    pub fn terms(&self) -> impl Iterator<Item = (&NcWord, u32, &Rational)> {
        self.terms
            .values()
            .rev()
            .flat_map(|e| e.coeffs.iter().map(move |(b, c)| (&e.word, *b, c)))
    }

    pub fn tip(&self) -> Result<Tip> {
        let (_, e) = self.terms.iter().next_back().ok_or(Error::ZeroPolynomial)?;
        let (&beta, &coeff) = e.coeffs.iter().next().unwrap();
        Ok(Tip {
            word: e.word.clone(),
            beta,
            coeff,
        })
    }

    /// The tip coefficient when it is a nonzero rational (no β).
    pub fn scalar_ctip(&self) -> Result<Rational> {
        let (_, e) = self.terms.iter().next_back().ok_or(Error::ZeroPolynomial)?;
        match (e.coeffs.len(), e.coeffs.get(&0)) {
            (1, Some(c)) => Ok(*c),
            _ => Err(Error::NonScalarTip),
        }
    }

    fn pop_largest(&mut self) -> Option<(NcWord, BTreeMap<u32, Rational>)> {
        self.terms.pop_last().map(|(_, e)| (e.word, e.coeffs))
    }

    fn largest(&self) -> Option<(&NcWord, &BTreeMap<u32, Rational>)> {
        self.terms
            .values()
            .next_back()
            .map(|e| (&e.word, &e.coeffs))
    }
}

impl fmt::Display for OrderedNcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms()
            .map(|(w, b, c)| format_term(c, b, &w.monomial()))
            .collect();
        f.write_str(&join_terms(terms))
    }
}

impl Serialize for OrderedNcPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Splits `w = a · t · b` for some member of the commutation class of `w`.
pub fn find_factor(w: &NcWord, t: &[SignedEdge]) -> Option<(Vec<SignedEdge>, Vec<SignedEdge>)> {
    let k = t.len();
    if k == 0 || k > w.len() {
        return None;
    }
    let mut letters = w.word.clone();
    letters.sort();
    let mut need = t.to_vec();
    need.sort();
    let mut i = 0;
    for e in &need {
        while i < letters.len() && letters[i] < *e {
            i += 1;
        }
        if i == letters.len() || letters[i] != *e {
            return None;
        }
        i += 1;
    }
    for member in commutation_class(w) {
        for s in 0..=member.len() - k {
            if member.word[s..s + k] == *t {
                return Some((member.word[..s].to_vec(), member.word[s + k..].to_vec()));
            }
        }
    }
    None
}

pub fn divides(t: &[SignedEdge], w: &[SignedEdge], n: usize) -> bool {
    find_factor(
        &NcWord {
            n,
            word: w.to_vec(),
        },
        t,
    )
    .is_some()
}

/// A basis element prepared for division.
#[derive(Debug, Clone)]
pub struct Reducer {
    pub name: String,
    pub poly: OrderedNcPoly,
    pub tip: NcWord,
    pub ctip: Rational,
}

impl Reducer {
    pub fn new(name: impl Into<String>, poly: &OrderedNcPoly, ctx: OrderContext) -> Result<Self> {
        let poly = poly.reorder(ctx);
        Ok(Reducer {
            name: name.into(),
            tip: poly.tip()?.word,
            ctip: poly.scalar_ctip()?,
            poly,
        })
    }
}

/// Default bound on division steps.
pub const MAX_DIVISION_STEPS: usize = 200_000;

/// Remainder of `p` on division by `basis`: the largest term is reduced by
/// the first reducer whose tip divides it, otherwise moved to the remainder.
pub fn divide(p: &OrderedNcPoly, basis: &[Reducer], max_steps: usize) -> Result<OrderedNcPoly> {
    let ctx = p.ctx();
    let mut rest = p.clone();
    let mut remainder = OrderedNcPoly::zero(ctx);
    let mut steps = 0usize;
    while let Some((w, _)) = rest.largest() {
        steps += 1;
        if steps > max_steps {
            return Err(Error::GuardExceeded {
                what: "division steps",
                value: steps as u128,
                limit: max_steps as u128,
            });
        }
        let hit = basis
            .iter()
            .find_map(|g| find_factor(w, &g.tip.word).map(|(a, b)| (g, a, b)));
        match hit {
            Some((g, a, b)) => {
                let (_, coeffs) = rest.largest().unwrap();
                let coeffs: Vec<(u32, Rational)> = coeffs.iter().map(|(k, v)| (*k, *v)).collect();
                for (beta, c) in coeffs {
                    rest.add_product(&a, &g.poly, &b, -c / g.ctip, beta);
                }
            }
            None => {
                let (w, coeffs) = rest.pop_largest().unwrap();
                for (beta, c) in coeffs {
                    remainder.add_term(&w.word, beta, c);
                }
            }
        }
    }
    Ok(remainder)
}

/// The tips `x_ij y_ik y_ij`, `i < j < k ≤ n`.
pub fn y_tips(n: usize) -> Vec<Vec<SignedEdge>> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                out.push(vec![
                    SignedEdge::x(i, j),
                    SignedEdge::y(i, k),
                    SignedEdge::y(i, j),
                ]);
            }
        }
    }
    out
}

/// First term, in the polynomial's own order, divisible up to commutation by
/// some `x_ij y_ik y_ij`.
pub fn y_membership_witness(p: &NcPolynomial) -> Option<String> {
    let tips = y_tips(p.n);
    p.terms().find_map(|(k, c)| {
        tips.iter()
            .any(|t| find_factor(&k.word, t).is_some())
            .then(|| format_term(c, k.beta, &k.word.monomial()))
    })
}
