//! Line-oriented text formats. Blank lines and `#` comments are ignored
//! everywhere.
//!
//! - embedding: `v <id>: <dart> ...` per vertex (cyclic order, darts
//!   `2e` and `2e+1` are the two ends of edge `e`), `s <edge> +|-` per edge;
//! - edge list: `p <n> <m>` then `e <u> <v>` lines;
//! - coloring: `k <k> d <d_1,...,d_k>` then `c <vertex> <color>`, colors
//!   numbered from 1;
//! - generator metadata: `key value` lines.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::{Color, Coloring, ColoringError, DefectVector};
use crate::constructions::{ClaimStatus, Meta, NonColorability, SampleInfo};
use crate::embedding::{Dart, EmbeddedGraph, EmbeddingError, Sign};
use crate::graph::{GraphError, SimpleGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("empty input")]
    Empty,
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn num<T: std::str::FromStr>(line: usize, token: Option<&str>, what: &str) -> Result<T, FormatError> {
    let token = token.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    token.parse().map_err(|_| syntax(line, format!("bad {what} `{token}`")))
}

fn no_more<'a>(line: usize, mut rest: impl Iterator<Item = &'a str>) -> Result<(), FormatError> {
    match rest.next() {
        Some(t) => Err(syntax(line, format!("unexpected `{t}`"))),
        None => Ok(()),
    }
}

pub fn parse_embedding(text: &str) -> Result<EmbeddedGraph, FormatError> {
    let mut rotations: Vec<Option<Vec<Dart>>> = Vec::new();
    let mut signs: Vec<(usize, Sign)> = Vec::new();
    for (ln, l) in lines(text) {
        let mut tokens = l.split_whitespace();
        match tokens.next() {
            Some("v") => {
                let id = tokens.next().ok_or_else(|| syntax(ln, "missing vertex id"))?;
                let id: usize = id
                    .strip_suffix(':')
                    .ok_or_else(|| syntax(ln, "expected `v <id>:`"))?
                    .parse()
                    .map_err(|_| syntax(ln, format!("bad vertex id `{id}`")))?;
                let darts = tokens
                    .map(|t| t.parse().map(Dart).map_err(|_| syntax(ln, format!("bad dart `{t}`"))))
                    .collect::<Result<Vec<_>, _>>()?;
                if id >= rotations.len() {
                    rotations.resize(id + 1, None);
                }
                if rotations[id].replace(darts).is_some() {
                    return Err(syntax(ln, format!("vertex {id} listed twice")));
                }
            }
            Some("s") => {
                let e: usize = num(ln, tokens.next(), "edge id")?;
                let sign = match tokens.next() {
                    Some("+") => Sign::Plus,
                    Some("-") => Sign::Minus,
                    other => return Err(syntax(ln, format!("expected + or -, got {other:?}"))),
                };
                no_more(ln, tokens)?;
                signs.push((e, sign));
            }
            Some(t) => return Err(syntax(ln, format!("unknown record `{t}`"))),
            None => unreachable!(),
        }
    }
    if rotations.is_empty() {
        return Err(FormatError::Empty);
    }
    let rotations: Vec<Vec<Dart>> = rotations
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| syntax(0, format!("vertex {v} has no `v` line"))))
        .collect::<Result<_, _>>()?;
    let darts: usize = rotations.iter().map(Vec::len).sum();
    if darts % 2 == 1 {
        return Err(syntax(0, "odd number of darts"));
    }
    let mut edge_signs = vec![None; darts / 2];
    for (e, s) in signs {
        let slot = edge_signs
            .get_mut(e)
            .ok_or_else(|| syntax(0, format!("sign given for unknown edge {e}")))?;
        if slot.replace(s).is_some() {
            return Err(syntax(0, format!("edge {e} signed twice")));
        }
    }
    let signs = edge_signs.into_iter().map(Option::unwrap_or_default).collect();
    Ok(EmbeddedGraph::new(rotations, signs)?)
}

pub fn print_embedding(g: &EmbeddedGraph) -> String {
    let mut out = String::new();
    for (v, rot) in g.rotations().iter().enumerate() {
        write!(out, "v {v}:").unwrap();
        for d in rot {
            write!(out, " {d}").unwrap();
        }
        out.push('\n');
    }
    for (e, s) in g.signs().iter().enumerate() {
        writeln!(out, "s {e} {}", if s.is_negative() { '-' } else { '+' }).unwrap();
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<SimpleGraph, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (ln, l) in lines(text) {
        let mut tokens = l.split_whitespace();
        match tokens.next() {
            Some("p") if header.is_none() => {
                let n = num(ln, tokens.next(), "vertex count")?;
                let m = num(ln, tokens.next(), "edge count")?;
                no_more(ln, tokens)?;
                header = Some((n, m));
            }
            Some("p") => return Err(syntax(ln, "second `p` line")),
            Some("e") if header.is_some() => {
                let u: usize = num(ln, tokens.next(), "endpoint")?;
                let v: usize = num(ln, tokens.next(), "endpoint")?;
                no_more(ln, tokens)?;
                edges.push((u, v));
            }
            Some("e") => return Err(syntax(ln, "`e` before the `p` line")),
            Some(t) => return Err(syntax(ln, format!("unknown record `{t}`"))),
            None => unreachable!(),
        }
    }
    let (n, m) = header.ok_or(FormatError::Empty)?;
    if edges.len() != m {
        return Err(syntax(0, format!("header promises {m} edges, found {}", edges.len())));
    }
    Ok(SimpleGraph::from_edges(n, edges)?)
}

pub fn print_edge_list(g: &SimpleGraph) -> String {
    let mut out = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

/// A graph file in either format.
#[derive(Clone, Debug)]
pub enum GraphInput {
    Embedded(EmbeddedGraph),
    Plain(SimpleGraph),
}

impl GraphInput {
    pub fn graph(&self) -> &SimpleGraph {
        match self {
            GraphInput::Embedded(e) => e.graph(),
            GraphInput::Plain(g) => g,
        }
    }

    pub fn embedding(&self) -> Option<&EmbeddedGraph> {
        match self {
            GraphInput::Embedded(e) => Some(e),
            GraphInput::Plain(_) => None,
        }
    }
}

/// Picks the format from the first record: `v` means embedding, `p` edge list.
pub fn parse_graph(text: &str) -> Result<GraphInput, FormatError> {
    match lines(text).next() {
        None => Err(FormatError::Empty),
        Some((_, l)) if l.starts_with("v ") || l == "v" => Ok(GraphInput::Embedded(parse_embedding(text)?)),
        Some((_, l)) if l.starts_with("p ") => Ok(GraphInput::Plain(parse_edge_list(text)?)),
        Some((ln, l)) => Err(syntax(ln, format!("cannot tell the format from `{l}`"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringFile {
    pub defects: DefectVector,
    /// Colors are 0-based here.
    pub assignments: Vec<(VertexId, Color)>,
}

impl ColoringFile {
    pub fn to_coloring(&self, n: usize) -> Result<Coloring, FormatError> {
        let mut c = Coloring::uncolored(n);
        for &(v, color) in &self.assignments {
            if v >= n {
                return Err(ColoringError::UnknownVertex(v).into());
            }
            if c.get(v).is_some() {
                return Err(syntax(0, format!("vertex {v} colored twice")));
            }
            c.set(v, color);
        }
        Ok(c)
    }
}

pub fn parse_coloring(text: &str) -> Result<ColoringFile, FormatError> {
    let mut defects = None;
    let mut assignments = Vec::new();
    for (ln, l) in lines(text) {
        let mut tokens = l.split_whitespace();
        match tokens.next() {
            Some("k") if defects.is_none() => {
                let k: usize = num(ln, tokens.next(), "k")?;
                if tokens.next() != Some("d") {
                    return Err(syntax(ln, "expected `k <k> d <d_1,...,d_k>`"));
                }
                let d: DefectVector = tokens
                    .next()
                    .ok_or_else(|| syntax(ln, "missing defects"))?
                    .parse()
                    .map_err(|e: ColoringError| syntax(ln, e.to_string()))?;
                no_more(ln, tokens)?;
                if d.k() != k {
                    return Err(syntax(ln, format!("k is {k} but {} defects are listed", d.k())));
                }
                defects = Some(d);
            }
            Some("k") => return Err(syntax(ln, "second `k` line")),
            Some("c") => {
                let v: usize = num(ln, tokens.next(), "vertex")?;
                let c: usize = num(ln, tokens.next(), "color")?;
                no_more(ln, tokens)?;
                if c == 0 {
                    return Err(syntax(ln, "colors are numbered from 1"));
                }
                assignments.push((v, c - 1));
            }
            Some(t) => return Err(syntax(ln, format!("unknown record `{t}`"))),
            None => unreachable!(),
        }
    }
    let defects = defects.ok_or(FormatError::Empty)?;
    if let Some(&(v, c)) = assignments.iter().find(|&&(_, c)| c >= defects.k()) {
        return Err(ColoringError::ColorOutOfRange { vertex: v, color: c, k: defects.k() }.into());
    }
    Ok(ColoringFile { defects, assignments })
}

/// Uncolored vertices are omitted.
pub fn print_coloring(defects: &DefectVector, coloring: &Coloring) -> String {
    let mut out = format!("k {} d {defects}\n", defects.k());
    for (v, c) in coloring.as_slice().iter().enumerate() {
        if let Some(c) = c {
            writeln!(out, "c {v} {}", c + 1).unwrap();
        }
    }
    out
}

pub fn print_meta(meta: &Meta) -> String {
    let mut out = String::new();
    let mut kv = |k: &str, v: &dyn std::fmt::Display| writeln!(out, "{k} {v}").unwrap();
    kv("family", &meta.family);
    kv("parameter", &meta.parameter);
    kv("vertices", &meta.vertices);
    kv("edges", &meta.edges);
    if let Some(g) = meta.girth_at_least {
        kv("girth_at_least", &g);
    }
    kv("euler_genus_at_most", &meta.euler_genus_at_most);
    if let Some(c) = &meta.claim {
        kv("not_colorable", &c.defects);
        if !c.pins.is_empty() {
            let pins: Vec<String> = c.pins.iter().map(|(v, col)| format!("{v}={}", col + 1)).collect();
            kv("pins", &pins.join(","));
        }
        kv("claim_status", &c.status);
    }
    if let Some(s) = &meta.sample {
        kv("sample_seed", &s.seed);
        kv("sample_start", &s.start);
        kv("sample_sets", &s.sets);
        kv("sample_total_sets", &s.total_sets);
    }
    out
}

pub fn parse_meta(text: &str) -> Result<Meta, FormatError> {
    let mut family = None;
    let mut parameter = None;
    let mut vertices = None;
    let mut edges = None;
    let mut girth_at_least = None;
    let mut genus_bound = None;
    let mut claim_defects: Option<DefectVector> = None;
    let mut pins = Vec::new();
    let mut status = None;
    let mut sample: [Option<u64>; 4] = [None; 4];
    for (ln, l) in lines(text) {
        let (key, value) = l.split_once(char::is_whitespace).ok_or_else(|| syntax(ln, "expected `key value`"))?;
        let value = value.trim();
        let int = || value.parse::<u64>().map_err(|_| syntax(ln, format!("bad number `{value}`")));
        match key {
            "family" => family = Some(value.to_string()),
            "parameter" => parameter = Some(int()?),
            "vertices" => vertices = Some(int()?),
            "edges" => edges = Some(int()?),
            "girth_at_least" => girth_at_least = Some(int()? as usize),
            "euler_genus_at_most" => genus_bound = Some(int()?),
            "not_colorable" => claim_defects = Some(value.parse().map_err(|e: ColoringError| syntax(ln, e.to_string()))?),
            "pins" => {
                for p in value.split(',') {
                    let (v, c) = p.split_once('=').ok_or_else(|| syntax(ln, format!("bad pin `{p}`")))?;
                    let v: usize = num(ln, Some(v), "pinned vertex")?;
                    let c: usize = num(ln, Some(c), "pinned color")?;
                    if c == 0 {
                        return Err(syntax(ln, "colors are numbered from 1"));
                    }
                    pins.push((v, c - 1));
                }
            }
            "claim_status" => {
                status = Some(match value {
                    "verified" => ClaimStatus::Verified,
                    "unverified" => ClaimStatus::Unverified,
                    "refuted" => ClaimStatus::Refuted,
                    _ => return Err(syntax(ln, format!("bad claim status `{value}`"))),
                })
            }
            "sample_seed" => sample[0] = Some(int()?),
            "sample_start" => sample[1] = Some(int()?),
            "sample_sets" => sample[2] = Some(int()?),
            "sample_total_sets" => sample[3] = Some(int()?),
            _ => return Err(syntax(ln, format!("unknown key `{key}`"))),
        }
    }
    let need = |x: Option<u64>, k: &str| x.ok_or_else(|| syntax(0, format!("missing `{k}`")));
    let claim = match claim_defects {
        Some(defects) => Some(NonColorability {
            defects,
            pins,
            status: status.ok_or_else(|| syntax(0, "missing `claim_status`"))?,
        }),
        None => None,
    };
    let sample = match sample {
        [Some(seed), Some(start), Some(sets), Some(total_sets)] => Some(SampleInfo { seed, start, sets, total_sets }),
        [None, None, None, None] => None,
        _ => return Err(syntax(0, "incomplete sample fields")),
    };
    Ok(Meta {
        family: family.ok_or_else(|| syntax(0, "missing `family`"))?,
        parameter: need(parameter, "parameter")?,
        vertices: need(vertices, "vertices")?,
        edges: need(edges, "edges")?,
        girth_at_least,
        claim,
        euler_genus_at_most: need(genus_bound, "euler_genus_at_most")?,
        sample,
    })
}
