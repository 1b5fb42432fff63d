//! Parsing of variable tokens (`x12`, `y13`, `z3`, `x_{10,12}`) and of
//! polynomials written with them.

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::signed_graph::SignedEdge;

fn err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        column,
        message: message.into(),
    }
}

/// Parses one variable. Returns the edge and `-1` when the token is an
/// `x_ji` with `j > i` (which stands for `-x_ij`).
pub fn parse_variable(tok: &str, column: usize) -> Result<(SignedEdge, i64)> {
    let mut chars = tok.chars();
    let letter = chars.next().ok_or_else(|| err(column, "empty token"))?;
    let rest = chars.as_str();
    let indices: Vec<usize> =
        if let Some(inner) = rest.strip_prefix("_{").and_then(|r| r.strip_suffix('}')) {
            inner
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| err(column, format!("bad indices in `{tok}`")))?
        } else {
            rest.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| err(column, format!("unknown variable `{tok}`")))?
        };
    if indices.contains(&0) {
        return Err(err(column, format!("indices start at 1 in `{tok}`")));
    }
    match (letter, indices.as_slice()) {
        ('z', [i]) => Ok((SignedEdge::z(*i), 1)),
        ('x', [i, j]) if i != j => Ok((SignedEdge::x(*i, *j), if i < j { 1 } else { -1 })),
        ('y', [i, j]) if i != j => Ok((SignedEdge::y(*i, *j), 1)),
        _ => Err(err(column, format!("unknown variable `{tok}`"))),
    }
}

/// A product of variables; returns the overall sign and the letters.
pub fn parse_word(text: &str) -> Result<(i64, Vec<SignedEdge>)> {
    let mut sign = 1;
    let mut letters = Vec::new();
    for (col, tok) in tokens(text) {
        let (e, s) = parse_variable(tok, col)?;
        sign *= s;
        letters.push(e);
    }
    Ok((sign, letters))
}

fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        if c.is_whitespace() || c == '*' {
            if let Some(s) = start.take() {
                out.push((s + 1, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &text[s..]));
    }
    out
}

/// One parsed term: coefficient, β power and letters.
pub type ParsedTerm = (Rational, u32, Vec<SignedEdge>);

/// Parses `a + b - 2 beta c ...` into terms. Letters may be separated by
/// spaces or `*`; `beta^k` raises β.
pub fn parse_polynomial(text: &str) -> Result<Vec<ParsedTerm>> {
    let mut out = Vec::new();
    let mut sign = Rational::from_integer(1);
    let mut current = String::new();
    let mut current_col = 1;
    let flush = |buf: &str, col: usize, sign: Rational, out: &mut Vec<ParsedTerm>| -> Result<()> {
        if buf.trim().is_empty() {
            return Err(err(col, "empty term"));
        }
        let mut coeff = sign;
        let mut beta = 0;
        let mut letters = Vec::new();
        for (c, tok) in tokens(buf) {
            let c = c + col - 1;
            if let Some(p) = tok.strip_prefix("beta") {
                beta += match p.strip_prefix('^') {
                    Some(k) => k
                        .parse::<u32>()
                        .map_err(|_| err(c, format!("bad power `{tok}`")))?,
                    None if p.is_empty() => 1,
                    None => return Err(err(c, format!("unknown token `{tok}`"))),
                };
            } else if tok.starts_with(|ch: char| ch.is_ascii_digit()) {
                let r: Rational = tok
                    .parse()
                    .map_err(|_| err(c, format!("bad coefficient `{tok}`")))?;
                coeff *= r;
            } else {
                let (e, s) = parse_variable(tok, c)?;
                coeff *= Rational::from_integer(s as i128);
                letters.push(e);
            }
        }
        out.push((coeff, beta, letters));
        Ok(())
    };
    for (i, ch) in text.char_indices() {
        if (ch == '+' || ch == '-') && !current.trim().is_empty() {
            flush(&current, current_col, sign, &mut out)?;
            current.clear();
            current_col = i + 2;
            sign = Rational::from_integer(if ch == '-' { -1 } else { 1 });
        } else if (ch == '+' || ch == '-') && current.trim().is_empty() && out.is_empty() {
            if ch == '-' {
                sign = -sign;
            }
            current_col = i + 2;
        } else {
            if current.is_empty() {
                current_col = i + 1;
            }
            current.push(ch);
        }
    }
    flush(&current, current_col, sign, &mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::signed_graph::SignedEdge as E;

    #[test]
    fn variables() {
        assert_eq!(parse_variable("x12", 1).unwrap(), (E::x(1, 2), 1));
        assert_eq!(parse_variable("x21", 1).unwrap(), (E::x(1, 2), -1));
        assert_eq!(parse_variable("y31", 1).unwrap(), (E::y(1, 3), 1));
        assert_eq!(parse_variable("z3", 1).unwrap(), (E::z(3), 1));
        assert_eq!(parse_variable("x_{10,12}", 1).unwrap(), (E::x(10, 12), 1));
        assert_eq!(parse_variable("z_{11}", 1).unwrap(), (E::z(11), 1));
        assert!(parse_variable("x11", 1).is_err());
        assert!(parse_variable("w12", 1).is_err());
        assert!(parse_variable("z0", 1).is_err());
    }

    #[test]
    fn words_report_columns() {
        let (s, w) = parse_word("x12 x23 z3").unwrap();
        assert_eq!((s, w), (1, vec![E::x(1, 2), E::x(2, 3), E::z(3)]));
        let e = parse_word("x12  q7").unwrap_err();
        assert!(matches!(e, Error::Parse { column: 6, .. }));
    }

    #[test]
    fn polynomials() {
        let p = parse_polynomial("z1 x13 x12 + beta z2 y12 - 1/2 beta^2 y13").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p[0], (rat(1), 0, vec![E::z(1), E::x(1, 3), E::x(1, 2)]));
        assert_eq!(p[1], (rat(1), 1, vec![E::z(2), E::y(1, 2)]));
        assert_eq!(p[2], (Rational::new(-1, 2), 2, vec![E::y(1, 3)]));
        let q = parse_polynomial("-x12*x23").unwrap();
        assert_eq!(q, vec![(rat(-1), 0, vec![E::x(1, 2), E::x(2, 3)])]);
        assert!(parse_polynomial("x12 +").is_err());
    }
}
