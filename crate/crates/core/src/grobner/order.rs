use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bracket::extreme_form;
use crate::error::{Error, Result};
use crate::signed_graph::{NcWord, SignedEdge};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OrderKind {
    /// x letters above y letters.
    J,
    /// y letters above x letters.
    Y,
}

/// Direction in which words of equal degree are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub enum Reading {
    #[default]
    LeftToRight,
    RightToLeft,
}

impl FromStr for Reading {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ltr" | "left" | "left-to-right" => Ok(Reading::LeftToRight),
            "rtl" | "right" | "right-to-left" => Ok(Reading::RightToLeft),
            other => Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("unknown reading `{other}`"),
            }),
        }
    }
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reading::LeftToRight => "left-to-right",
            Reading::RightToLeft => "right-to-left",
        })
    }
}

/// Degree-lexicographic order on commutation classes, compared through
/// their lexicographically largest representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct OrderContext {
    pub kind: OrderKind,
    pub reading: Reading,
    pub n: usize,
}

/// Comparison key of a canonical word: degree, then letter ranks in reading
/// order. Larger keys are larger monomials.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SortKey(usize, Vec<u32>);

impl OrderContext {
    pub fn order_j(n: usize) -> Self {
        OrderContext {
            kind: OrderKind::J,
            reading: Reading::LeftToRight,
            n,
        }
    }

    /// The order under which the Y generators get the tip `x_ij y_ik y_ij`.
    pub fn order_y(n: usize) -> Self {
        OrderContext {
            kind: OrderKind::Y,
            reading: Reading::RightToLeft,
            n,
        }
    }

    pub fn with_reading(self, reading: Reading) -> Self {
        OrderContext { reading, ..self }
    }

    /// Lexicographically smaller index pairs rank higher; the favoured sign
    /// ranks above the other; loops rank below everything.
    pub fn letter_rank(&self, e: &SignedEdge) -> u32 {
        if e.is_loop() {
            return 0;
        }
        let pair = 1 + (64 * 64 - (e.lo as u32 * 64 + e.hi as u32));
        let favoured = match self.kind {
            OrderKind::J => e.is_negative(),
            OrderKind::Y => e.is_positive(),
        };
        if favoured {
            pair + 64 * 64 + 1
        } else {
            pair
        }
    }

    pub fn canonical_rep(&self, w: &NcWord) -> NcWord {
        let better = |a: &SignedEdge, b: &SignedEdge| self.letter_rank(a) > self.letter_rank(b);
        match self.reading {
            Reading::LeftToRight => extreme_form(w, better),
            Reading::RightToLeft => {
                let rev = NcWord {
                    n: w.n,
                    word: w.word.iter().rev().copied().collect(),
                };
                let best = extreme_form(&rev, better);
                NcWord {
                    n: w.n,
                    word: best.word.into_iter().rev().collect(),
                }
            }
        }
    }

    /// Key of an already canonical word.
    pub fn key_of_canonical(&self, w: &[SignedEdge]) -> SortKey {
        let ranks: Vec<u32> = match self.reading {
            Reading::LeftToRight => w.iter().map(|e| self.letter_rank(e)).collect(),
            Reading::RightToLeft => w.iter().rev().map(|e| self.letter_rank(e)).collect(),
        };
        SortKey(w.len(), ranks)
    }

    pub fn key(&self, w: &NcWord) -> SortKey {
        self.key_of_canonical(&self.canonical_rep(w).word)
    }

    pub fn compare(&self, a: &NcWord, b: &NcWord) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    /// First violated admissibility axiom for the monomials `p, q, r, s`.
    pub fn admissibility_violation(
        &self,
        p: &NcWord,
        q: &NcWord,
        r: &NcWord,
        s: &NcWord,
    ) -> Option<&'static str> {
        let cat = |a: &NcWord, b: &NcWord| NcWord {
            n: a.n,
            word: a.word.iter().chain(&b.word).copied().collect(),
        };
        let ord = self.compare(p, q);
        if ord != Ordering::Equal {
            let (lo, hi) = if ord == Ordering::Less {
                (p, q)
            } else {
                (q, p)
            };
            if self.compare(&cat(lo, r), &cat(hi, r)) != Ordering::Less {
                return Some("right multiplication");
            }
            if self.compare(&cat(s, lo), &cat(s, hi)) != Ordering::Less {
                return Some("left multiplication");
            }
        }
        let qr = cat(q, r);
        if !q.word.is_empty()
            && !r.word.is_empty()
            && (self.compare(&qr, q) != Ordering::Greater
                || self.compare(&qr, r) != Ordering::Greater)
        {
            return Some("factor dominance");
        }
        None
    }
}
