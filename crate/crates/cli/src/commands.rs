use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Result};
use rootpoly_core::bracket::{
    nc_reduce, nc_walk, AlgebraMode, NcPolynomial, PriorityReading, ReduceOptions,
};
use rootpoly_core::ehrhart::{ehrhart_fit, ehrhart_formula_pl, lattice_count, EhrhartPoly};
use rootpoly_core::grobner::{
    check_grobner_j, check_grobner_y, GrobnerOptions, GrobnerReport, Reading,
};
use rootpoly_core::signed_graph::{
    alternating_well_structured, alternating_wws_subgraphs, WwsCensus,
};
use rootpoly_core::subdivision::{
    build_tree, reduced_form, CPolynomial, CommutativeAlgebra, ReductionTree, TreeOptions,
};
use rootpoly_core::verify::{Scale, Verifier};
use rootpoly_core::volume::{cyclic_components, triangulate, VolumeCache};
use rootpoly_core::{Rational, SignedGraph, Strategy};
use serde::Serialize;
use serde_json::json;

use crate::args::{Algebra, Basis, Cli, Command, Format, Input, Kind, Shape, SuiteArg};
use crate::input::{parse_graph, read_source};

pub struct Report {
    pub output: String,
    pub success: bool,
}

impl Report {
    fn ok(output: String) -> Self {
        Report {
            output,
            success: true,
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

pub fn run(cli: &Cli) -> Result<Report> {
    let format = cli.global.format;
    let max_nodes = usize::try_from(cli.global.max_nodes).unwrap_or(usize::MAX);
    match &cli.command {
        Command::Reduce {
            input,
            algebra,
            strategy,
            priority,
        } => reduce(input, *algebra, *strategy, *priority, max_nodes, format),
        Command::Tree {
            input,
            algebra,
            strategy,
        } => tree(input, *algebra, *strategy, max_nodes, format),
        Command::Triangulate { input } => triangulation(input, format),
        Command::Volume { input } => volume(input, format),
        Command::Ehrhart { n, graph, fit, t } => ehrhart(*n, graph.as_deref(), *fit, *t, format),
        Command::Enumerate { n, kind } => enumerate(*n, *kind, format),
        Command::Check {
            suite,
            n,
            seeds,
            roots,
            words,
            seed,
        } => check(
            *suite,
            Scale {
                n_max: *n,
                strategies: *seeds,
                random_roots: *roots,
                random_words: *words,
                seed: *seed,
            },
            format,
        ),
        Command::Grobner {
            n,
            check,
            reading,
            shape,
        } => grobner(*n, *check, *reading, *shape, format),
    }
}

fn nc_mode(a: Algebra) -> Option<AlgebraMode> {
    match a {
        Algebra::C => Some(AlgebraMode::C),
        Algebra::Cb => Some(AlgebraMode::CBeta),
        Algebra::D => Some(AlgebraMode::D),
        Algebra::S | Algebra::Bc => None,
    }
}

fn commutative(a: Algebra) -> CommutativeAlgebra {
    if a == Algebra::Bc {
        CommutativeAlgebra::Bc
    } else {
        CommutativeAlgebra::S
    }
}

fn negated(p: &CPolynomial) -> CPolynomial {
    let mut out = CPolynomial::new();
    for (m, c) in p.terms() {
        out.add(m.clone(), -*c);
    }
    out
}

#[derive(Serialize)]
struct ReduceOut<'a, P: Serialize> {
    algebra: &'a str,
    strategy: String,
    input: String,
    polynomial: P,
    terms: usize,
}

fn reduce(
    input: &Input,
    algebra: Algebra,
    strategy: Strategy,
    priority: PriorityReading,
    max_nodes: usize,
    format: Format,
) -> Result<Report> {
    let (text, json) = match nc_mode(algebra) {
        Some(mode) => {
            let w = input.word()?;
            let opts = ReduceOptions {
                mode,
                strategy,
                priority,
                max_nodes,
            };
            let mut p = nc_reduce(&w.word, opts)?;
            if w.sign < 0 {
                p = p.scaled(Rational::from_integer(-1));
            }
            let out = ReduceOut {
                algebra: algebra_name(algebra),
                strategy: strategy.to_string(),
                input: signed_monomial(w.sign, &w.word.monomial()),
                terms: p.len(),
                polynomial: &p,
            };
            (p.to_string(), to_json(&out)?)
        }
        None => {
            let (sign, g) = match input.load()? {
                crate::input::Source::Graph(g) => (1, g),
                crate::input::Source::Word(w) => (w.sign, w.word.graph()),
            };
            let opts = TreeOptions {
                algebra: commutative(algebra),
                strategy,
                max_nodes,
            };
            let mut p = reduced_form(&g, opts)?;
            if sign < 0 {
                p = negated(&p);
            }
            let out = ReduceOut {
                algebra: algebra_name(algebra),
                strategy: strategy.to_string(),
                input: signed_monomial(sign, &g.monomial()),
                terms: p.len(),
                polynomial: &p,
            };
            (p.to_string(), to_json(&out)?)
        }
    };
    Ok(Report::ok(match format {
        Format::Text => text + "\n",
        Format::Json => json,
    }))
}

fn algebra_name(a: Algebra) -> &'static str {
    match a {
        Algebra::S => "S",
        Algebra::Bc => "Bc",
        Algebra::C => "C",
        Algebra::Cb => "Cb",
        Algebra::D => "D",
    }
}

fn signed_monomial(sign: i64, m: &str) -> String {
    if sign < 0 {
        format!("-{m}")
    } else {
        m.to_string()
    }
}

fn beta_prefix(beta: u32) -> String {
    match beta {
        0 => String::new(),
        1 => "beta ".to_string(),
        b => format!("beta^{b} "),
    }
}

fn render_tree(t: &ReductionTree, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match &t.step {
        None => {
            let _ = writeln!(out, "{pad}{}{}", beta_prefix(t.beta), t.graph.monomial());
        }
        Some(s) => {
            let _ = writeln!(
                out,
                "{pad}{}{}  [{}]",
                beta_prefix(t.beta),
                t.graph.monomial(),
                s.reduction
            );
            for c in &s.children {
                render_tree(c, depth + 1, out);
            }
        }
    }
}

#[derive(Serialize)]
struct NcStep {
    word: String,
    rule: String,
    letters: [String; 2],
    children: Vec<String>,
}

#[derive(Serialize)]
struct NcTreeOut {
    algebra: &'static str,
    strategy: String,
    steps: Vec<NcStep>,
    leaves: Vec<String>,
    polynomial: NcPolynomial,
}

fn tree(
    input: &Input,
    algebra: Algebra,
    strategy: Strategy,
    max_nodes: usize,
    format: Format,
) -> Result<Report> {
    if let Some(mode) = nc_mode(algebra) {
        let w = input.word()?;
        let opts = ReduceOptions {
            mode,
            strategy,
            priority: PriorityReading::default(),
            max_nodes,
        };
        let mut steps = Vec::new();
        let leaves = nc_walk(&w.word, opts, &mut |word, inst, kids| {
            steps.push(NcStep {
                word: word.monomial(),
                rule: inst.rule.to_string(),
                letters: [word.word[inst.p].variable(), word.word[inst.q].variable()],
                children: kids
                    .iter()
                    .map(|(c, b)| format!("{}{}", beta_prefix(*b), c.monomial()))
                    .collect(),
            });
        })?;
        let mut poly = NcPolynomial::new(w.word.n);
        for (leaf, b) in &leaves {
            poly.add_word(leaf, *b, Rational::from_integer(w.sign as i128));
        }
        let out = NcTreeOut {
            algebra: algebra_name(algebra),
            strategy: strategy.to_string(),
            leaves: leaves
                .iter()
                .map(|(c, b)| format!("{}{}", beta_prefix(*b), c.monomial()))
                .collect(),
            steps,
            polynomial: poly,
        };
        return Ok(Report::ok(match format {
            Format::Json => to_json(&out)?,
            Format::Text => {
                let mut s = String::new();
                for st in &out.steps {
                    let _ = writeln!(
                        s,
                        "{}  [{} on {} {}] -> {}",
                        st.word,
                        st.rule,
                        st.letters[0],
                        st.letters[1],
                        st.children.join(" + ")
                    );
                }
                let _ = writeln!(s, "leaves: {}", out.leaves.len());
                let _ = writeln!(s, "{}", out.polynomial);
                s
            }
        }));
    }
    let g = input.graph()?;
    let t = build_tree(
        &g,
        TreeOptions {
            algebra: commutative(algebra),
            strategy,
            max_nodes,
        },
    )?;
    Ok(Report::ok(match format {
        Format::Json => to_json(&t)?,
        Format::Text => {
            let mut s = String::new();
            render_tree(&t, 0, &mut s);
            let _ = writeln!(s, "nodes: {}, leaves: {}", t.node_count(), t.leaves().len());
            s
        }
    }))
}

fn triangulation(input: &Input, format: Format) -> Result<Report> {
    let g = input.graph()?;
    let t = triangulate(&g)?;
    Ok(Report::ok(match format {
        Format::Json => to_json(&t)?,
        Format::Text => {
            let mut s = String::new();
            for (i, simplex) in t.simplices.iter().enumerate() {
                let _ = writeln!(s, "# simplex {}: {}", i + 1, simplex.monomial());
                let _ = writeln!(s, "{simplex}");
            }
            let summary = json!({"volume": t.volume, "f": t.f, "k": t.k, "d": t.d});
            let _ = writeln!(s, "{summary}");
            s
        }
    }))
}

fn volume(input: &Input, format: Format) -> Result<Report> {
    let g = input.graph()?;
    let mut cache = VolumeCache::default();
    let f = cache.leaf_count(&g)?;
    let vol = cache.volume(&g)?;
    let k = cyclic_components(&g);
    let report = json!({
        "n": g.n(),
        "d": g.len(),
        "k": k,
        "f": f,
        "volume": vol.to_string(),
    });
    Ok(Report::ok(match format {
        Format::Json => to_json(&report)?,
        Format::Text => format!(
            "n = {}, d = {}, k = {}, f = {}\nvolume = {}\n",
            g.n(),
            g.len(),
            k,
            f,
            vol
        ),
    }))
}

#[derive(Serialize)]
struct EhrhartOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula: Option<EhrhartPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fit: Option<EhrhartPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    counts: Vec<(u64, u64)>,
}

fn ehrhart(
    n: Option<usize>,
    graph: Option<&Path>,
    fit: bool,
    t: Option<u64>,
    format: Format,
) -> Result<Report> {
    let g = match (n, graph) {
        (_, Some(p)) => parse_graph(&read_source(p)?)?,
        (Some(n), None) => SignedGraph::p_l(n),
        (None, None) => bail!("give --n or --graph"),
    };
    let formula = match (n, graph) {
        (Some(n), None) => Some(ehrhart_formula_pl(n)),
        _ => None,
    };
    let fitted = if fit || graph.is_some() {
        Some(ehrhart_fit(&g)?)
    } else {
        None
    };
    let counts = match t {
        Some(t) => (0..=t)
            .map(|s| Ok((s, lattice_count(&g, s, false)?)))
            .collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };
    let agree = match (&formula, &fitted) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let out = EhrhartOut {
        n: formula.as_ref().and(n),
        graph: graph.map(|_| g.monomial()),
        formula,
        fit: fitted,
        agree,
        counts,
    };
    let success = out.agree != Some(false);
    let output = match format {
        Format::Json => to_json(&out)?,
        Format::Text => {
            let mut s = String::new();
            if let Some(p) = &out.formula {
                let _ = writeln!(s, "formula: L(t) = {p}");
            }
            if let Some(p) = &out.fit {
                let _ = writeln!(s, "fit:     L(t) = {p}");
            }
            if let Some(a) = out.agree {
                let _ = writeln!(s, "agree: {a}");
            }
            for (t, c) in &out.counts {
                let _ = writeln!(s, "L({t}) = {c}");
            }
            s
        }
    };
    Ok(Report { output, success })
}

#[derive(Serialize)]
struct EnumerateOut {
    n: usize,
    kind: &'static str,
    count: usize,
    graphs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    census: Option<WwsCensus>,
}

fn enumerate(n: usize, kind: Kind, format: Format) -> Result<Report> {
    let (graphs, census, label) = match kind {
        Kind::WellStructured => (alternating_well_structured(n), None, "well-structured"),
        Kind::Weakly => {
            let gs = alternating_wws_subgraphs(n);
            let c = WwsCensus::from_graphs(n, &gs);
            (gs, Some(c), "weakly-well-structured")
        }
    };
    let out = EnumerateOut {
        n,
        kind: label,
        count: graphs.len(),
        graphs: graphs.iter().map(SignedGraph::monomial).collect(),
        census,
    };
    if let Some(c) = &out.census {
        let full = c.loopless_full();
        if full != 0 {
            eprintln!("warning: {full} loopless weakly-well-structured graphs with {n} edges");
        }
    }
    Ok(Report::ok(match format {
        Format::Json => to_json(&out)?,
        Format::Text => {
            let mut s = String::new();
            for g in &out.graphs {
                let _ = writeln!(s, "{g}");
            }
            let _ = writeln!(s, "count: {}", out.count);
            if let Some(c) = &out.census {
                let _ = writeln!(s, "with loop by edges:    {:?}", c.with_loop);
                let _ = writeln!(s, "without loop by edges: {:?}", c.without_loop);
            }
            s
        }
    }))
}

#[derive(Serialize)]
struct CheckLine<'a> {
    id: usize,
    name: &'a str,
    passed: bool,
    detail: &'a str,
}

fn check(suite: SuiteArg, scale: Scale, format: Format) -> Result<Report> {
    let mut v = Verifier::new(scale);
    let mut results = Vec::new();
    for s in suite.suites() {
        results.extend(v.run_suite(s));
    }
    let success = results.iter().all(|r| r.passed);
    let output = match format {
        Format::Json => {
            let lines: Vec<CheckLine> = results
                .iter()
                .map(|r| CheckLine {
                    id: r.id,
                    name: r.name,
                    passed: r.passed,
                    detail: &r.detail,
                })
                .collect();
            to_json(&json!({"scale": scale, "results": lines, "passed": success}))?
        }
        Format::Text => {
            let mut s = format!(
                "scale: n <= {}, {} strategies, {} roots, {} words, seed {}\n",
                scale.n_max, scale.strategies, scale.random_roots, scale.random_words, scale.seed
            );
            for r in &results {
                let _ = writeln!(s, "{r}");
            }
            let _ = writeln!(s, "{}", if success { "PASS" } else { "FAIL" });
            s
        }
    };
    Ok(Report { output, success })
}

fn grobner(
    n: usize,
    basis: Basis,
    reading: Reading,
    shape: Shape,
    format: Format,
) -> Result<Report> {
    let opts = GrobnerOptions {
        shape: shape.into(),
        ..GrobnerOptions::default()
    };
    let mut reports: Vec<GrobnerReport> = Vec::new();
    if matches!(basis, Basis::J | Basis::All) {
        reports.push(check_grobner_j(n, opts)?);
    }
    if matches!(basis, Basis::Y | Basis::All) {
        reports.push(check_grobner_y(n, reading, opts)?);
    }
    let success = reports.iter().all(|r| r.passed);
    let output = match format {
        Format::Json => to_json(&reports)?,
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let nonzero = r.nonzero().count();
                let _ = writeln!(
                    s,
                    "{} (n = {}): {} tips, tip-reduced {}, {} overlaps, {} not reduced to 0: {}",
                    r.basis,
                    r.n,
                    r.tips.len(),
                    r.tip_reduced,
                    r.overlaps.len(),
                    nonzero,
                    if r.passed { "PASS" } else { "FAIL" }
                );
                for o in r.nonzero() {
                    let _ = writeln!(
                        s,
                        "  {} / {}  b = {}  c = {}\n    remainder: {}\n    status: {:?}",
                        o.f, o.g, o.b, o.c, o.remainder, o.status
                    );
                }
            }
            s
        }
    };
    Ok(Report { output, success })
}
