use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::signed_graph::SignedEdge;

/// Which noncommutative algebra supplies the rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum AlgebraMode {
    /// Type C, no β.
    C,
    /// Type C with β terms.
    CBeta,
    /// Type D with β terms; no `z` letters and no rules (9), (9').
    D,
}

impl AlgebraMode {
    pub fn has_beta(self) -> bool {
        self != AlgebraMode::C
    }
}

impl FromStr for AlgebraMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "C" => Ok(AlgebraMode::C),
            "Cb" => Ok(AlgebraMode::CBeta),
            "D" => Ok(AlgebraMode::D),
            other => Err(format!("unknown noncommutative algebra `{other}`")),
        }
    }
}

/// Left-hand sides, with `i < j < k`:
/// 5 `x_ij x_jk`, 5' `x_jk x_ij`, 6 `x_ij y_jk`, 6' `y_jk x_ij`,
/// 7 `x_ik y_jk`, 7' `y_jk x_ik`, 8 `y_ik x_jk`, 8' `x_jk y_ik`,
/// 9 `x_ij z_j`, 9' `z_j x_ij`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum NcRule {
    R5,
    R5p,
    R6,
    R6p,
    R7,
    R7p,
    R8,
    R8p,
    R9,
    R9p,
}

impl fmt::Display for NcRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NcRule::R5 => "5",
            NcRule::R5p => "5'",
            NcRule::R6 => "6",
            NcRule::R6p => "6'",
            NcRule::R7 => "7",
            NcRule::R7p => "7'",
            NcRule::R8 => "8",
            NcRule::R8p => "8'",
            NcRule::R9 => "9",
            NcRule::R9p => "9'",
        };
        write!(f, "({s})")
    }
}

/// Rule whose left-hand side is the ordered pair `a b`.
pub fn nc_rule(a: &SignedEdge, b: &SignedEdge, mode: AlgebraMode) -> Option<NcRule> {
    let x = |e: &SignedEdge| e.is_negative();
    let y = |e: &SignedEdge| e.is_positive() && !e.is_loop();
    let z = |e: &SignedEdge| e.is_loop();
    let rule = if x(a) && x(b) && a.hi == b.lo {
        NcRule::R5
    } else if x(a) && x(b) && b.hi == a.lo {
        NcRule::R5p
    } else if x(a) && y(b) && a.hi == b.lo {
        NcRule::R6
    } else if y(a) && x(b) && b.hi == a.lo {
        NcRule::R6p
    } else if x(a) && y(b) && a.hi == b.hi && a.lo < b.lo {
        NcRule::R7
    } else if y(a) && x(b) && a.hi == b.hi && b.lo < a.lo {
        NcRule::R7p
    } else if y(a) && x(b) && a.hi == b.hi && a.lo < b.lo {
        NcRule::R8
    } else if x(a) && y(b) && a.hi == b.hi && b.lo < a.lo {
        NcRule::R8p
    } else if x(a) && z(b) && b.lo == a.hi {
        NcRule::R9
    } else if z(a) && x(b) && a.lo == b.hi {
        NcRule::R9p
    } else {
        return None;
    };
    if mode == AlgebraMode::D && matches!(rule, NcRule::R9 | NcRule::R9p) {
        return None;
    }
    Some(rule)
}

/// Right-hand side of `a b` as words with their β power (coefficients are
/// all +1).
pub fn nc_rhs(
    rule: NcRule,
    a: &SignedEdge,
    b: &SignedEdge,
    mode: AlgebraMode,
) -> Vec<(Vec<SignedEdge>, u32)> {
    use SignedEdge as E;
    let (i, j, k);
    let terms: Vec<Vec<E>>;
    let beta_terms: Vec<E>;
    match rule {
        NcRule::R5 => {
            (i, j, k) = (a.lo, a.hi, b.hi);
            terms = vec![vec![E::x(i, k), E::x(i, j)], vec![E::x(j, k), E::x(i, k)]];
            beta_terms = vec![E::x(i, k)];
        }
        NcRule::R5p => {
            (i, j, k) = (b.lo, b.hi, a.hi);
            terms = vec![vec![E::x(i, j), E::x(i, k)], vec![E::x(i, k), E::x(j, k)]];
            beta_terms = vec![E::x(i, k)];
        }
        NcRule::R6 => {
            (i, j, k) = (a.lo, a.hi, b.hi);
            terms = vec![vec![E::y(i, k), E::x(i, j)], vec![E::y(j, k), E::y(i, k)]];
            beta_terms = vec![E::y(i, k)];
        }
        NcRule::R6p => {
            (i, j, k) = (b.lo, b.hi, a.hi);
            terms = vec![vec![E::x(i, j), E::y(i, k)], vec![E::y(i, k), E::y(j, k)]];
            beta_terms = vec![E::y(i, k)];
        }
        NcRule::R7 => {
            (i, j, k) = (a.lo, b.lo, a.hi);
            terms = vec![vec![E::y(j, k), E::y(i, j)], vec![E::y(i, j), E::x(i, k)]];
            beta_terms = vec![E::y(i, j)];
        }
        NcRule::R7p => {
            (i, j, k) = (b.lo, a.lo, a.hi);
            terms = vec![vec![E::y(i, j), E::y(j, k)], vec![E::x(i, k), E::y(i, j)]];
            beta_terms = vec![E::y(i, j)];
        }
        NcRule::R8 => {
            (i, j, k) = (a.lo, b.lo, a.hi);
            terms = vec![vec![E::x(j, k), E::y(i, j)], vec![E::y(i, j), E::y(i, k)]];
            beta_terms = vec![E::y(i, j)];
        }
        NcRule::R8p => {
            (i, j, k) = (b.lo, a.lo, a.hi);
            terms = vec![vec![E::y(i, j), E::x(j, k)], vec![E::y(i, k), E::y(i, j)]];
            beta_terms = vec![E::y(i, j)];
        }
        NcRule::R9 => {
            (i, j) = (a.lo, a.hi);
            terms = vec![
                vec![E::z(i), E::x(i, j)],
                vec![E::y(i, j), E::z(i)],
                vec![E::z(j), E::y(i, j)],
            ];
            beta_terms = vec![E::z(i), E::y(i, j)];
        }
        NcRule::R9p => {
            (i, j) = (b.lo, b.hi);
            terms = vec![
                vec![E::x(i, j), E::z(i)],
                vec![E::z(i), E::y(i, j)],
                vec![E::y(i, j), E::z(j)],
            ];
            beta_terms = vec![E::z(i), E::y(i, j)];
        }
    }
    let mut out: Vec<(Vec<E>, u32)> = terms.into_iter().map(|t| (t, 0)).collect();
    if mode.has_beta() {
        out.extend(beta_terms.into_iter().map(|e| (vec![e], 1)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed_graph::SignedEdge as E;

    #[test]
    fn rule_lookup() {
        use AlgebraMode::*;
        assert_eq!(nc_rule(&E::x(1, 2), &E::x(2, 3), C), Some(NcRule::R5));
        assert_eq!(nc_rule(&E::x(2, 3), &E::x(1, 2), C), Some(NcRule::R5p));
        assert_eq!(nc_rule(&E::x(1, 2), &E::y(2, 3), C), Some(NcRule::R6));
        assert_eq!(nc_rule(&E::y(2, 3), &E::x(1, 2), C), Some(NcRule::R6p));
        assert_eq!(nc_rule(&E::x(1, 3), &E::y(2, 3), C), Some(NcRule::R7));
        assert_eq!(nc_rule(&E::y(2, 3), &E::x(1, 3), C), Some(NcRule::R7p));
        assert_eq!(nc_rule(&E::y(1, 3), &E::x(2, 3), C), Some(NcRule::R8));
        assert_eq!(nc_rule(&E::x(2, 3), &E::y(1, 3), C), Some(NcRule::R8p));
        assert_eq!(nc_rule(&E::x(1, 3), &E::z(3), C), Some(NcRule::R9));
        assert_eq!(nc_rule(&E::z(3), &E::x(1, 3), C), Some(NcRule::R9p));
        assert_eq!(nc_rule(&E::x(1, 3), &E::z(3), D), None);
        assert_eq!(nc_rule(&E::x(1, 2), &E::y(1, 2), C), None);
        assert_eq!(nc_rule(&E::x(1, 2), &E::x(1, 3), C), None);
        assert_eq!(nc_rule(&E::x(1, 2), &E::z(1), C), None);
    }

    #[test]
    fn rule_nine_sizes() {
        let a = E::x(1, 3);
        let b = E::z(3);
        assert_eq!(nc_rhs(NcRule::R9, &a, &b, AlgebraMode::C).len(), 3);
        assert_eq!(nc_rhs(NcRule::R9, &a, &b, AlgebraMode::CBeta).len(), 5);
        let r = nc_rhs(NcRule::R5, &E::x(1, 2), &E::x(2, 3), AlgebraMode::D);
        assert_eq!(r[2], (vec![E::x(1, 3)], 1));
    }
}
