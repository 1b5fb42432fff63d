use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use rootpoly_core::notation::parse_word;
use rootpoly_core::signed_graph::{parse_graph_json, parse_graph_text};
use rootpoly_core::{NcWord, SignedGraph};

use crate::args::Input;

pub fn read_source(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

pub fn parse_graph(text: &str) -> Result<SignedGraph> {
    let g = if text.trim_start().starts_with('{') {
        parse_graph_json(text)?
    } else {
        parse_graph_text(text)?
    };
    Ok(g)
}

/// A word with its sign (`x_ji` for `i < j` reads as `-x_ij`).
pub struct SignedWord {
    pub sign: i64,
    pub word: NcWord,
}

pub fn parse_inline_word(text: &str, n: Option<usize>) -> Result<SignedWord> {
    let (sign, letters) = parse_word(text.trim())?;
    let largest = letters.iter().map(|e| e.hi).max().unwrap_or(1);
    let n = n.unwrap_or(largest);
    Ok(SignedWord {
        sign,
        word: NcWord::new(n, letters)?,
    })
}

pub enum Source {
    Graph(SignedGraph),
    Word(SignedWord),
}

impl Input {
    pub fn load(&self) -> Result<Source> {
        if let Some(w) = &self.word {
            let text = if w == "-" {
                read_source(Path::new("-"))?
            } else {
                w.clone()
            };
            return Ok(Source::Word(parse_inline_word(&text, self.n)?));
        }
        match self.path.as_ref().or(self.graph.as_ref()) {
            Some(p) => {
                let g = parse_graph(&read_source(p)?)?;
                if let Some(n) = self.n {
                    if n != g.n() {
                        bail!("--n {n} disagrees with the graph header n {}", g.n());
                    }
                }
                Ok(Source::Graph(g))
            }
            None => bail!("no input: give a graph file, `-` for stdin, or --word"),
        }
    }

    pub fn graph(&self) -> Result<SignedGraph> {
        Ok(match self.load()? {
            Source::Graph(g) => g,
            Source::Word(w) => w.word.graph(),
        })
    }

    pub fn word(&self) -> Result<SignedWord> {
        Ok(match self.load()? {
            Source::Word(w) => w,
            Source::Graph(g) => SignedWord {
                sign: 1,
                word: NcWord::new(g.n(), g.edges().to_vec())?,
            },
        })
    }
}
