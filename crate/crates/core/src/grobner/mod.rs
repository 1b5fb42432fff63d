//! Noncommutative Gröbner bases over the partially commutative algebra in
//! `x_ij`, `y_ij`: the ideal `J` of the four reduction families, the ideal
//! `Y`, overlap relations, division, and the verification reports.

mod order;
mod poly;

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::bracket::{commutation_class, letters_commute};
use crate::error::Result;
use crate::linalg::rat;
use crate::signed_graph::{NcWord, SignedEdge};

pub use order::{OrderContext, OrderKind, Reading, SortKey};
pub use poly::{
    divide, divides, find_factor, y_membership_witness, y_tips, OrderedNcPoly, Reducer, Tip,
    MAX_DIVISION_STEPS,
};

/// A named generator of an ideal.
#[derive(Debug, Clone)]
pub struct Generator {
    pub name: String,
    pub poly: OrderedNcPoly,
}

fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                out.push((i, j, k));
            }
        }
    }
    out
}

fn generator(ctx: OrderContext, name: String, terms: &[(i128, u32, Vec<SignedEdge>)]) -> Generator {
    let poly = OrderedNcPoly::from_terms(
        ctx,
        terms.iter().map(|(c, b, w)| (rat(*c), *b, w.as_slice())),
    );
    Generator { name, poly }
}

/// Generators of `J`: relations (5), (6), (7), (8') as polynomials.
pub fn j_generators(ctx: OrderContext) -> Vec<Generator> {
    use SignedEdge as E;
    let mut out = Vec::new();
    for (i, j, k) in triples(ctx.n) {
        let (xij, xik, xjk) = (E::x(i, j), E::x(i, k), E::x(j, k));
        let (yij, yik, yjk) = (E::y(i, j), E::y(i, k), E::y(j, k));
        out.push(generator(
            ctx,
            format!("g5({i},{j},{k})"),
            &[
                (1, 0, vec![xij, xjk]),
                (-1, 0, vec![xik, xij]),
                (-1, 0, vec![xjk, xik]),
                (-1, 1, vec![xik]),
            ],
        ));
        out.push(generator(
            ctx,
            format!("g6({i},{j},{k})"),
            &[
                (1, 0, vec![xij, yjk]),
                (-1, 0, vec![yik, xij]),
                (-1, 0, vec![yjk, yik]),
                (-1, 1, vec![yik]),
            ],
        ));
        out.push(generator(
            ctx,
            format!("g7({i},{j},{k})"),
            &[
                (1, 0, vec![xik, yjk]),
                (-1, 0, vec![yjk, yij]),
                (-1, 0, vec![yij, xik]),
                (-1, 1, vec![yij]),
            ],
        ));
        out.push(generator(
            ctx,
            format!("g8'({i},{j},{k})"),
            &[
                (1, 0, vec![xjk, yik]),
                (-1, 0, vec![yij, xjk]),
                (-1, 0, vec![yik, yij]),
                (-1, 1, vec![yij]),
            ],
        ));
    }
    out
}

/// Generators of `Y`.
pub fn y_generators(ctx: OrderContext) -> Vec<Generator> {
    use SignedEdge as E;
    triples(ctx.n)
        .into_iter()
        .map(|(i, j, k)| {
            let (xij, xik, xjk) = (E::x(i, j), E::x(i, k), E::x(j, k));
            let (yij, yik) = (E::y(i, j), E::y(i, k));
            generator(
                ctx,
                format!("Y({i},{j},{k})"),
                &[
                    (1, 0, vec![xik, xij, yik]),
                    (1, 0, vec![xjk, xik, yik]),
                    (1, 1, vec![xik, yik]),
                    (-1, 0, vec![xij, yij, xjk]),
                    (-1, 0, vec![xij, yik, yij]),
                    (-1, 1, vec![xij, yij]),
                ],
            )
        })
        .collect()
}

/// `J` with the β coefficient of `g5(1,2,3)` doubled.
pub fn mutated_j_generators(ctx: OrderContext) -> Vec<Generator> {
    let mut gens = j_generators(ctx);
    if let Some(g) = gens.iter_mut().find(|g| g.name == "g5(1,2,3)") {
        g.poly.add_term(&[SignedEdge::x(1, 3)], 1, rat(-1));
    }
    gens
}

pub fn reducers(gens: &[Generator], ctx: OrderContext) -> Result<Vec<Reducer>> {
    gens.iter()
        .map(|g| Reducer::new(g.name.clone(), &g.poly, ctx))
        .collect()
}

/// Whether no tip divides another, up to commutation.
pub fn is_tip_reduced(reducers: &[Reducer]) -> bool {
    reducers.iter().enumerate().all(|(a, f)| {
        reducers
            .iter()
            .enumerate()
            .all(|(b, g)| a == b || !divides(&f.tip.word, &g.tip.word, f.tip.n))
    })
}

/// Which `(b, c)` pairs count as overlaps of two tips `p·r` and `r·s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum OverlapShape {
    /// `b = p`, `c = s` only, as in a free algebra.
    Adjacent,
    /// Every `b = p·q`, `c = q·s` with `q` commuting with `r`, within the
    /// tip-length bound `|b| ≤ |Tip(f)|`, `|c| ≤ |Tip(g)|`.
    #[default]
    Separated,
}

#[derive(Debug, Clone)]
pub struct Overlap {
    pub f: usize,
    pub g: usize,
    pub b: NcWord,
    pub c: NcWord,
    pub relation: OrderedNcPoly,
}

fn letters(n: usize) -> Vec<SignedEdge> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(SignedEdge::x(i, j));
            out.push(SignedEdge::y(i, j));
        }
    }
    out
}

/// Words of length `1..=max_len` over `alphabet`.
fn words_up_to(alphabet: &[SignedEdge], max_len: usize) -> Vec<Vec<SignedEdge>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<SignedEdge>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                alphabet.iter().map(move |a| {
                    let mut v = w.clone();
                    v.push(*a);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// All overlap relations `f c / CTip(f) - b g / CTip(g)` between reducers.
pub fn overlaps(basis: &[Reducer], shape: OverlapShape) -> Vec<Overlap> {
    let Some(first) = basis.first() else {
        return Vec::new();
    };
    let ctx = first.poly.ctx();
    let n = ctx.n;
    let alphabet = letters(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (fi, f) in basis.iter().enumerate() {
        for (gi, g) in basis.iter().enumerate() {
            for t1 in commutation_class(&f.tip) {
                for t2 in commutation_class(&g.tip) {
                    let (t1, t2) = (&t1.word, &t2.word);
                    for k in 1..=t1.len().min(t2.len()) {
                        if t1[t1.len() - k..] != t2[..k] {
                            continue;
                        }
                        let r = &t1[t1.len() - k..];
                        let p = &t1[..t1.len() - k];
                        let s = &t2[k..];
                        let mut qs: Vec<Vec<SignedEdge>> = Vec::new();
                        // an empty separator needs a proper overlap
                        if k < t1.len() && k < t2.len() {
                            qs.push(vec![]);
                        }
                        if shape == OverlapShape::Separated {
                            let free: Vec<SignedEdge> = alphabet
                                .iter()
                                .filter(|q| r.iter().all(|e| letters_commute(e, q)))
                                .copied()
                                .collect();
                            qs.extend(words_up_to(&free, k));
                        }
                        for q in qs {
                            let b: Vec<SignedEdge> = p.iter().chain(&q).copied().collect();
                            let c: Vec<SignedEdge> = q.iter().chain(s).copied().collect();
                            if divides(t1, &b, n) || divides(t2, &c, n) {
                                continue;
                            }
                            let bw = ctx.canonical_rep(&NcWord { n, word: b });
                            let cw = ctx.canonical_rep(&NcWord { n, word: c });
                            if !seen.insert((fi, gi, bw.word.clone(), cw.word.clone())) {
                                continue;
                            }
                            let mut relation = OrderedNcPoly::zero(ctx);
                            relation.add_product(&[], &f.poly, &cw.word, rat(1) / f.ctip, 0);
                            relation.add_product(&bw.word, &g.poly, &[], rat(-1) / g.ctip, 0);
                            out.push(Overlap {
                                f: fi,
                                g: gi,
                                b: bw,
                                c: cw,
                                relation,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum OverlapStatus {
    Zero,
    /// Nonzero remainder carrying a term divisible by a `Y` tip.
    Inconclusive(String),
    Nonzero,
}

#[derive(Debug, Clone, Serialize)]
pub struct OverlapReport {
    pub f: String,
    pub g: String,
    pub b: String,
    pub c: String,
    pub overlap: String,
    pub remainder: String,
    pub status: OverlapStatus,
}

#[derive(Debug, Clone, Serialize)]
pub struct GrobnerReport {
    pub basis: String,
    pub n: usize,
    pub order: OrderContext,
    pub shape: OverlapShape,
    pub tips: Vec<String>,
    pub tip_reduced: bool,
    pub overlaps: Vec<OverlapReport>,
    pub passed: bool,
}

impl GrobnerReport {
    pub fn nonzero(&self) -> impl Iterator<Item = &OverlapReport> {
        self.overlaps
            .iter()
            .filter(|o| o.status != OverlapStatus::Zero)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct GrobnerOptions {
    pub shape: OverlapShape,
    pub max_steps: usize,
}

impl Default for GrobnerOptions {
    fn default() -> Self {
        GrobnerOptions {
            shape: OverlapShape::Separated,
            max_steps: MAX_DIVISION_STEPS,
        }
    }
}

/// Reduces every overlap of `basis` by `basis` followed by `extra`.
pub fn check_basis(
    label: &str,
    basis: &[Generator],
    extra: &[Generator],
    ctx: OrderContext,
    opts: GrobnerOptions,
) -> Result<GrobnerReport> {
    let main = reducers(basis, ctx)?;
    let mut all = main.clone();
    all.extend(reducers(extra, ctx)?);
    let found = overlaps(&main, opts.shape);
    let overlaps: Vec<OverlapReport> = found
        .par_iter()
        .map(|o| -> Result<OverlapReport> {
            let rem = divide(&o.relation, &all, opts.max_steps)?;
            let status = if rem.is_zero() {
                OverlapStatus::Zero
            } else {
                match y_membership_witness(&rem.to_nc()) {
                    Some(t) => OverlapStatus::Inconclusive(t),
                    None => OverlapStatus::Nonzero,
                }
            };
            Ok(OverlapReport {
                f: main[o.f].name.clone(),
                g: main[o.g].name.clone(),
                b: o.b.monomial(),
                c: o.c.monomial(),
                overlap: o.relation.to_string(),
                remainder: rem.to_string(),
                status,
            })
        })
        .collect::<Result<_>>()?;
    let tip_reduced = is_tip_reduced(&all);
    let passed = tip_reduced && overlaps.iter().all(|o| o.status == OverlapStatus::Zero);
    Ok(GrobnerReport {
        basis: label.to_string(),
        n: ctx.n,
        order: ctx,
        shape: opts.shape,
        tips: main
            .iter()
            .map(|r| format!("{}: {}", r.name, r.tip.monomial()))
            .collect(),
        tip_reduced,
        overlaps,
        passed,
    })
}

/// Overlaps of `J` under the J order, reduced modulo `Y`.
pub fn check_grobner_j(n: usize, opts: GrobnerOptions) -> Result<GrobnerReport> {
    let ctx = OrderContext::order_j(n);
    check_basis("J", &j_generators(ctx), &y_generators(ctx), ctx, opts)
}

pub fn check_grobner_j_mutated(n: usize, opts: GrobnerOptions) -> Result<GrobnerReport> {
    let ctx = OrderContext::order_j(n);
    check_basis(
        "J (mutated)",
        &mutated_j_generators(ctx),
        &y_generators(ctx),
        ctx,
        opts,
    )
}

pub fn check_grobner_y(n: usize, reading: Reading, opts: GrobnerOptions) -> Result<GrobnerReport> {
    let ctx = OrderContext::order_y(n).with_reading(reading);
    check_basis("Y", &y_generators(ctx), &[], ctx, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::{nc_reduce, AlgebraMode, ReduceOptions};
    use crate::notation::parse_word;
    use crate::strategy::Strategy;

    fn w(s: &str, n: usize) -> NcWord {
        NcWord::new(n, parse_word(s).unwrap().1).unwrap()
    }

    #[test]
    fn tips_of_generators() {
        let j = OrderContext::order_j(3);
        let tips: Vec<String> = reducers(&j_generators(j), j)
            .unwrap()
            .iter()
            .map(|r| r.tip.monomial())
            .collect();
        assert_eq!(tips, ["x12 x23", "x12 y23", "x13 y23", "x23 y13"]);
        let y = OrderContext::order_y(3);
        let r = reducers(&y_generators(y), y).unwrap();
        assert_eq!(r[0].tip.monomial(), "x12 y13 y12");
        let ltr = y.with_reading(Reading::LeftToRight);
        assert_eq!(
            reducers(&y_generators(ltr), ltr).unwrap()[0].tip.monomial(),
            "x12 y12 x23"
        );
        assert_eq!(
            reducers(&y_generators(j), j).unwrap()[0].tip.monomial(),
            "x12 y12 x23"
        );
    }

    #[test]
    fn beta_multiple_is_smaller() {
        let j = OrderContext::order_j(3);
        let x = [SignedEdge::x(1, 2)];
        let p = OrderedNcPoly::from_terms(j, [(rat(1), 1, &x[..]), (rat(2), 0, &x[..])]);
        assert_eq!(p.tip().unwrap().beta, 0);
        assert_eq!(p.tip().unwrap().coeff, rat(2));
        assert!(p.scalar_ctip().is_err());
    }

    #[test]
    fn generator_divides_to_zero() {
        let j = OrderContext::order_j(3);
        let gens = j_generators(j);
        let red = reducers(&gens, j).unwrap();
        for g in &gens {
            assert!(divide(&g.poly, &red, 1000).unwrap().is_zero());
        }
    }

    #[test]
    fn division_matches_reduction() {
        let j = OrderContext::order_j(3);
        let mut red = reducers(&j_generators(j), j).unwrap();
        red.extend(reducers(&y_generators(j), j).unwrap());
        let word = w("x12 x23 y13", 3);
        let p = OrderedNcPoly::from_terms(j, [(rat(1), 0, &word.word[..])]);
        let rem = divide(&p, &red, 10_000).unwrap();
        let again = divide(&rem, &red, 10_000).unwrap();
        assert_eq!(rem, again);
        let reduced =
            nc_reduce(&word, ReduceOptions::new(AlgebraMode::D, Strategy::First)).unwrap();
        assert_eq!(rem, OrderedNcPoly::from_nc(&reduced, j));
    }

    #[test]
    fn overlap_shapes() {
        let j = OrderContext::order_j(4);
        let red = reducers(&j_generators(j), j).unwrap();
        let ov = overlaps(&red, OverlapShape::Adjacent);
        assert!(ov.iter().any(|o| red[o.f].name == "g5(1,2,3)"
            && red[o.g].name == "g5(2,3,4)"
            && o.b.monomial() == "x12"
            && o.c.monomial() == "x34"));
        assert!(overlaps(&red, OverlapShape::Separated).len() > ov.len());
        let y = OrderContext::order_y(4);
        assert!(overlaps(
            &reducers(&y_generators(y), y).unwrap(),
            OverlapShape::Separated
        )
        .is_empty());
    }

    #[test]
    fn j_is_grobner_modulo_y_for_three() {
        let report = check_grobner_j(3, GrobnerOptions::default()).unwrap();
        assert!(report.tip_reduced);
        assert!(!report.overlaps.is_empty());
        assert!(report.passed, "{:#?}", report.nonzero().collect::<Vec<_>>());
        let mutated = check_grobner_j_mutated(3, GrobnerOptions::default()).unwrap();
        assert!(mutated.nonzero().count() > 0);
    }

    #[test]
    fn witness() {
        let y = OrderContext::order_y(3);
        let g = &y_generators(y)[0];
        assert_eq!(
            y_membership_witness(&g.poly.to_nc()).as_deref(),
            Some("-x12 y13 y12")
        );
        assert_eq!(
            y_membership_witness(&crate::bracket::NcPolynomial::new(3)),
            None
        );
    }
}
