//! Exact linear algebra over the rationals, sized for desk-scale problems
//! (a handful of rows and columns).

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Rational = Ratio<i128>;

pub fn rat(n: i128) -> Rational {
    Rational::from_integer(n)
}

fn to_rows(rows: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| rat(x as i128)).collect())
        .collect()
}

/// Row-reduces `m` in place and returns the pivot columns.
fn row_reduce(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                let pivot = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot).skip(c) {
                    *x -= *p * f;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of the row set.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m = to_rows(rows);
    row_reduce(&mut m).len()
}

/// Determinant of a square integer matrix.
pub fn det(matrix: &[Vec<i64>]) -> Rational {
    let n = matrix.len();
    let mut m = to_rows(matrix);
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= m[c][c];
        for i in c + 1..n {
            let f = m[i][c] / m[c][c];
            if f.is_zero() {
                continue;
            }
            let pivot = m[c].clone();
            for (x, p) in m[i].iter_mut().zip(&pivot).skip(c) {
                *x -= *p * f;
            }
        }
    }
    d
}

/// Solves `sum_k coeffs[k] * gens[k] = target` when the generators are
/// linearly independent. Returns `None` when `target` is outside their span.
pub fn solve_combination(gens: &[Vec<i64>], target: &[i64]) -> Option<Vec<Rational>> {
    let k = gens.len();
    let n = target.len();
    // Augmented system: one row per coordinate, one column per generator.
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = gens.iter().map(|g| rat(g[i] as i128)).collect();
            row.push(rat(target[i] as i128));
            row
        })
        .collect();
    let pivots = row_reduce(&mut m);
    if pivots.contains(&k) {
        return None;
    }
    assert_eq!(pivots.len(), k, "generators must be linearly independent");
    let mut out = vec![Rational::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        out[c] = m[r][k];
    }
    Some(out)
}

/// A basis of the null space of `rows` (as a matrix acting on column vectors).
pub fn null_space(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = row_reduce(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f];
            }
            v
        })
        .collect()
}

/// Indices of a maximal linearly independent subset of the columns of the
/// matrix whose rows are `rows`, chosen greedily left to right.
pub fn independent_columns(rows: &[Vec<i64>]) -> Vec<usize> {
    if rows.is_empty() {
        return Vec::new();
    }
    let mut m = to_rows(rows);
    row_reduce(&mut m)
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive_integer(v: &[Rational]) -> Vec<i128> {
    use num_integer::Integer;
    let lcm = v.iter().fold(1i128, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i128> = v.iter().map(|x| (x * rat(lcm)).to_integer()).collect();
    let g = ints.iter().fold(0i128, |acc, x| acc.gcd(x));
    if g == 0 {
        return ints;
    }
    ints.iter().map(|x| x / g).collect()
}

pub fn is_nonnegative(v: &[Rational]) -> bool {
    v.iter().all(|x| !x.is_negative())
}
