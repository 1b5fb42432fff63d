//! Ehrhart polynomials of coned root polytopes, by formula and by counting.

use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::linalg::{null_space, rat, solve_combination, Rational};
use crate::root_geometry::{edge_vectors, vertex_set};
use crate::signed_graph::{SignedGraph, WwsCensus};
use crate::subdivision::{walk_tree, TreeOptions};
use crate::volume::kept_columns;

/// Largest bounding box `lattice_count` will scan.
pub const MAX_BOX_POINTS: u128 = 50_000_000;

/// A polynomial in `t` with rational coefficients, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EhrhartPoly {
    coefficients: Vec<Rational>,
}

impl EhrhartPoly {
    pub fn new(mut coefficients: Vec<Rational>) -> Self {
        while coefficients.last().is_some_and(|c| c.is_zero()) {
            coefficients.pop();
        }
        EhrhartPoly { coefficients }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coefficients
            .last()
            .copied()
            .unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, t: i64) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * rat(t as i128) + c)
    }

    fn add_scaled(&mut self, other: &EhrhartPoly, c: Rational) {
        if self.coefficients.len() < other.coefficients.len() {
            self.coefficients
                .resize(other.coefficients.len(), Rational::zero());
        }
        for (i, x) in other.coefficients.iter().enumerate() {
            self.coefficients[i] += x * c;
        }
        *self = EhrhartPoly::new(std::mem::take(&mut self.coefficients));
    }

    /// `C(t + shift, d)` as a polynomial in `t`.
    pub fn binomial(shift: i64, d: usize) -> EhrhartPoly {
        let mut c = vec![Rational::one()];
        for i in 0..d {
            // multiply by (t + shift - i) / (i + 1)
            let a = rat((shift - i as i64) as i128);
            let mut next = vec![Rational::zero(); c.len() + 1];
            for (k, x) in c.iter().enumerate() {
                next[k] += x * a;
                next[k + 1] += x;
            }
            let denom = rat(i as i128 + 1);
            c = next.into_iter().map(|x| x / denom).collect();
        }
        EhrhartPoly::new(c)
    }
}

impl fmt::Display for EhrhartPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let coeff = if abs.is_one() && k > 0 {
                String::new()
            } else if abs.is_integer() || k == 0 {
                abs.to_string()
            } else {
                format!("({abs})")
            };
            match k {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}t")?,
                _ => write!(f, "{coeff}t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for EhrhartPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

/// Ehrhart polynomial of the full polytope on `[n]` from the census of
/// alternating weakly-well-structured graphs.
pub fn ehrhart_formula_pl(n: usize) -> EhrhartPoly {
    ehrhart_from_census(&WwsCensus::of(n))
}

pub fn ehrhart_from_census(census: &WwsCensus) -> EhrhartPoly {
    let n = census.n;
    let mut out = EhrhartPoly::default();
    for d in 1..=n {
        let sign = if d % 2 == 0 { rat(1) } else { rat(-1) };
        let fl = rat(census.with_loop[d] as i128) * sign;
        out.add_scaled(&EhrhartPoly::binomial(d as i64, d), fl);
        out.add_scaled(&EhrhartPoly::binomial(d as i64 - 1, d), fl);
        if d < n {
            let f = rat(census.without_loop[d] as i128) * sign;
            out.add_scaled(&EhrhartPoly::binomial(d as i64, d), f);
        }
    }
    if n % 2 == 1 {
        out = EhrhartPoly::new(out.coefficients.iter().map(|c| -c).collect());
    }
    out
}

/// One simplex of a central triangulation, with barycentric coordinates
/// read off through the kept columns.
struct Cell {
    inverse: Vec<Vec<Rational>>,
}

impl Cell {
    fn coordinates(&self, x: &[i64]) -> Vec<Rational> {
        self.inverse
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, &b)| a * rat(b as i128)).sum())
            .collect()
    }
}

struct Scanner {
    n: usize,
    kept: Vec<usize>,
    cells: Vec<Cell>,
    complement: Vec<Vec<Rational>>,
    vertex_sum: Vec<i64>,
    vertex_count: i64,
    lo: Vec<i64>,
    hi: Vec<i64>,
}

impl Scanner {
    fn new(g: &SignedGraph) -> Result<Scanner> {
        if !g.is_linearly_independent() {
            return Err(Error::NotIndependent);
        }
        let n = g.n();
        let kept = kept_columns(g);
        let leaves = walk_tree(g, TreeOptions::default(), &mut |_, _, _| {})?;
        let mut cells = Vec::new();
        for (leaf, _) in leaves.iter().filter(|(l, _)| l.len() == g.len()) {
            let gens: Vec<Vec<i64>> = edge_vectors(leaf)
                .iter()
                .map(|v| kept.iter().map(|&c| v[c]).collect())
                .collect();
            let d = kept.len();
            let mut inverse = vec![vec![Rational::zero(); d]; d];
            for j in 0..d {
                let mut e = vec![0i64; d];
                e[j] = 1;
                let col = solve_combination(&gens, &e)
                    .ok_or_else(|| Error::Internal("singular simplex".into()))?;
                for (i, x) in col.into_iter().enumerate() {
                    inverse[i][j] = x;
                }
            }
            cells.push(Cell { inverse });
        }
        let rows: Vec<Vec<Rational>> = edge_vectors(g)
            .iter()
            .map(|v| v.iter().map(|&x| rat(x as i128)).collect())
            .collect();
        let complement = if rows.is_empty() {
            (0..n)
                .map(|i| (0..n).map(|j| rat((i == j) as i128)).collect())
                .collect()
        } else {
            null_space(&rows, n)
        };
        let vertices = vertex_set(g);
        let mut vertex_sum = vec![0i64; n];
        let mut lo = vec![0i64; n];
        let mut hi = vec![0i64; n];
        for v in &vertices {
            for i in 0..n {
                vertex_sum[i] += v[i];
                lo[i] = lo[i].min(v[i]);
                hi[i] = hi[i].max(v[i]);
            }
        }
        Ok(Scanner {
            n,
            kept,
            cells,
            complement,
            vertex_sum,
            vertex_count: vertices.len() as i64 + 1,
            lo,
            hi,
        })
    }

    fn in_span(&self, x: &[i64]) -> bool {
        self.complement.iter().all(|u| {
            u.iter()
                .zip(x)
                .map(|(a, &b)| a * rat(b as i128))
                .sum::<Rational>()
                .is_zero()
        })
    }

    /// Whether `x` lies in `t P`, or in its relative interior when `interior`.
    /// The interior test perturbs `x` away from the centroid of the vertices
    /// and compares barycentric coordinates lexicographically.
    fn contains(&self, x: &[i64], t: i64, interior: bool) -> bool {
        let project = |v: &[i64]| -> Vec<i64> { self.kept.iter().map(|&c| v[c]).collect() };
        let px = project(x);
        let dir: Vec<i64> = (0..self.n)
            .map(|i| self.vertex_count * x[i] - t * self.vertex_sum[i])
            .collect();
        let pdir = project(&dir);
        let lex_ok =
            |a: Rational, b: Rational| a.is_positive() || (a.is_zero() && !b.is_negative());
        self.cells.iter().any(|cell| {
            let lam = cell.coordinates(&px);
            let slack = rat(t as i128) - lam.iter().sum::<Rational>();
            if !interior {
                return lam.iter().all(|c| !c.is_negative()) && !slack.is_negative();
            }
            let mu = cell.coordinates(&pdir);
            let mu_slack = -mu.iter().sum::<Rational>();
            lam.iter().zip(&mu).all(|(&a, &b)| lex_ok(a, b)) && lex_ok(slack, mu_slack)
        })
    }
}

/// Number of lattice points in `t P(G)`, or in its relative interior.
pub fn lattice_count(g: &SignedGraph, t: u64, interior: bool) -> Result<u64> {
    if g.is_empty() {
        return Ok(1);
    }
    if t == 0 {
        return Ok(if interior { 0 } else { 1 });
    }
    let scanner = Scanner::new(g)?;
    let t = t as i64;
    let ranges: Vec<(i64, i64)> = (0..scanner.n)
        .map(|i| (t * scanner.lo[i], t * scanner.hi[i]))
        .collect();
    let size: u128 = ranges.iter().map(|(a, b)| (b - a + 1) as u128).product();
    if size > MAX_BOX_POINTS {
        return Err(Error::GuardExceeded {
            what: "lattice box points",
            value: size,
            limit: MAX_BOX_POINTS,
        });
    }
    let (first_lo, first_hi) = ranges[0];
    let count = (first_lo..=first_hi)
        .into_par_iter()
        .map(|x0| {
            let mut x: Vec<i64> = ranges.iter().map(|r| r.0).collect();
            x[0] = x0;
            let mut count = 0u64;
            loop {
                if scanner.in_span(&x) && scanner.contains(&x, t, interior) {
                    count += 1;
                }
                let mut i = 1;
                loop {
                    if i == x.len() {
                        return count;
                    }
                    if x[i] < ranges[i].1 {
                        x[i] += 1;
                        break;
                    }
                    x[i] = ranges[i].0;
                    i += 1;
                }
            }
        })
        .sum();
    Ok(count)
}

/// Interpolates the lattice counts at `t = 0..d`, then confirms at `d + 1`.
pub fn ehrhart_fit(g: &SignedGraph) -> Result<EhrhartPoly> {
    let d = g.len();
    let counts: Vec<u64> = (0..=d as u64 + 1)
        .map(|t| lattice_count(g, t, false))
        .collect::<Result<_>>()?;
    // Newton forward differences in the binomial basis C(t, k).
    let mut diffs: Vec<Rational> = counts[..=d].iter().map(|&c| rat(c as i128)).collect();
    let mut out = EhrhartPoly::default();
    for k in 0..=d {
        out.add_scaled(&EhrhartPoly::binomial(0, k), diffs[0]);
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
    }
    let t = d as u64 + 1;
    let predicted = out.eval(t as i64);
    if predicted != rat(counts[d + 1] as i128) {
        return Err(Error::InconsistentCounts {
            degree: d,
            t,
            predicted: predicted.to_string(),
            counted: counts[d + 1],
        });
    }
    Ok(out)
}

/// Ehrhart–Macdonald reciprocity `L(-t) = (-1)^d L°(t)` at one `t`.
pub fn reciprocity_holds(g: &SignedGraph, poly: &EhrhartPoly, t: u64) -> Result<bool> {
    let interior = lattice_count(g, t, true)?;
    let sign = if poly.degree().is_multiple_of(2) {
        1
    } else {
        -1
    };
    Ok(poly.eval(-(t as i64)) == rat(sign * interior as i128))
}

/// Interior count predicted for the simplex of an alternating
/// weakly-well-structured graph with `d` edges.
pub fn simplex_interior_count(d: usize, has_loop: bool, t: u64) -> u128 {
    let d = d as u64;
    let base = if t == 0 { 0 } else { binomial(t - 1, d) };
    if has_loop {
        base + binomial(t, d)
    } else {
        base
    }
}
