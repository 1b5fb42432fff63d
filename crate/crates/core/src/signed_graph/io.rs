//! Plain-text and JSON graph formats.
//!
//! Text: a header `n <vertices>` followed by one edge per line, `i j +` or
//! `i j -`. Blank lines and `#` comments are skipped.

use serde::{Deserialize, Serialize};

use super::{Sign, SignedEdge, SignedGraph};
use crate::error::{Error, Result};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_graph_text(text: &str) -> Result<SignedGraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut col = 0;
        for tok in line.split_whitespace() {
            let at = line[col..].find(tok).unwrap() + col;
            tokens.push((at + 1, tok));
            col = at + tok.len();
        }
        if tokens.is_empty() {
            continue;
        }
        if n.is_none() {
            match tokens.as_slice() {
                [(_, "n"), (c, v)] => {
                    n = Some(
                        v.parse()
                            .map_err(|_| parse_err(line_no, *c, "expected a vertex count"))?,
                    )
                }
                [(c, _), ..] => {
                    return Err(parse_err(line_no, *c, "expected header `n <vertices>`"))
                }
                [] => unreachable!(),
            }
            continue;
        }
        let nv = n.unwrap();
        let [(ca, a), (cb, b), (cs, s)] = tokens.as_slice() else {
            return Err(parse_err(
                line_no,
                tokens[0].0,
                "expected `i j +` or `i j -`",
            ));
        };
        let vertex = |tok: &str, c: usize| -> Result<usize> {
            let v: usize = tok
                .parse()
                .map_err(|_| parse_err(line_no, c, format!("`{tok}` is not a vertex")))?;
            if v == 0 || v > nv {
                return Err(parse_err(
                    line_no,
                    c,
                    format!("vertex {v} is outside [1, {nv}]"),
                ));
            }
            Ok(v)
        };
        let (a, b) = (vertex(a, *ca)?, vertex(b, *cb)?);
        let sign = match *s {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            other => return Err(parse_err(line_no, *cs, format!("`{other}` is not a sign"))),
        };
        let e = SignedEdge::new(a, b, sign).map_err(|e| parse_err(line_no, *ca, e.to_string()))?;
        edges.push(e);
    }
    let n = n.ok_or_else(|| parse_err(1, 1, "missing header `n <vertices>`"))?;
    SignedGraph::new(n, edges)
}

pub(crate) fn to_text(g: &SignedGraph) -> String {
    let mut s = format!("n {}\n", g.n());
    for e in g.edges() {
        s.push_str(&format!("{} {} {}\n", e.lo, e.hi, e.sign.symbol()));
    }
    s
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize, String)>,
}

pub fn parse_graph_json(text: &str) -> Result<SignedGraph> {
    let raw: GraphJson =
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.column(), e.to_string()))?;
    let mut edges = Vec::new();
    for (a, b, s) in raw.edges {
        let sign = match s.as_str() {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            other => return Err(parse_err(1, 1, format!("`{other}` is not a sign"))),
        };
        edges.push(SignedEdge::new(a, b, sign)?);
    }
    SignedGraph::new(raw.n, edges)
}

impl Serialize for SignedGraph {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n(),
            edges: self
                .edges()
                .iter()
                .map(|e| (e.lo, e.hi, e.sign.symbol().to_string()))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl Serialize for SignedEdge {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        (self.lo, self.hi, self.sign.symbol().to_string()).serialize(serializer)
    }
}
