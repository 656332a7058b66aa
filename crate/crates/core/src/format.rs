//! Line-oriented text formats.
//!
//! ```text
//! # poset
//! elements: a b c
//! less: a b
//!
//! # hypergraph
//! vertices: a b c
//! edge: a b
//!
//! # graph
//! vertices: a b c
//! edge: a b
//!
//! # set family, `set:` alone is the empty set
//! set: a b
//! ```
//!
//! `#` starts a comment and blank lines are ignored. Line order does not
//! matter.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::poset::Poset;
use crate::set::ElementSet;
use crate::universe::{Universe, UniverseRef};

struct Line<'a> {
    no: usize,
    key: &'a str,
    tokens: Vec<&'a str>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn lines<'a>(text: &'a str, keys: &[&str]) -> Result<Vec<Line<'a>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (key, rest) = body
            .split_once(':')
            .ok_or_else(|| parse_err(no, format!("expected `key: ...`, got {body:?}")))?;
        let key = key.trim();
        if !keys.contains(&key) {
            return Err(parse_err(no, format!("unexpected key {key:?}")));
        }
        out.push(Line {
            no,
            key,
            tokens: rest.split_whitespace().collect(),
        });
    }
    Ok(out)
}

fn header(lines: &[Line<'_>], key: &str, allow_reserved: bool) -> Result<UniverseRef> {
    let mut found = lines.iter().filter(|l| l.key == key);
    let first = found
        .next()
        .ok_or_else(|| parse_err(0, format!("missing `{key}:` line")))?;
    if let Some(dup) = found.next() {
        return Err(parse_err(dup.no, format!("second `{key}:` line")));
    }
    let tokens = first.tokens.iter().copied();
    if allow_reserved {
        Universe::new(tokens)
    } else {
        Universe::new_user(tokens)
    }
}

fn lookup(u: &Universe, line: &Line<'_>) -> Result<Vec<usize>> {
    line.tokens
        .iter()
        .map(|t| {
            u.index_of(t)
                .map_err(|_| parse_err(line.no, format!("unknown element {t:?}")))
        })
        .collect()
}

pub fn parse_poset(text: &str, allow_reserved: bool) -> Result<Poset> {
    let ls = lines(text, &["elements", "less"])?;
    let u = header(&ls, "elements", allow_reserved)?;
    let mut pairs = Vec::new();
    for l in ls.iter().filter(|l| l.key == "less") {
        let ix = lookup(&u, l)?;
        if ix.len() != 2 {
            return Err(parse_err(l.no, "`less:` takes exactly two elements"));
        }
        pairs.push((ix[0], ix[1]));
    }
    Poset::new(u, &pairs)
}

pub fn parse_hypergraph(text: &str, allow_reserved: bool) -> Result<Hypergraph> {
    let ls = lines(text, &["vertices", "edge"])?;
    let u = header(&ls, "vertices", allow_reserved)?;
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    for l in ls.iter().filter(|l| l.key == "edge") {
        let e = ElementSet::from_indices(u.len(), lookup(&u, l)?);
        if e.is_empty() {
            return Err(Error::EmptyEdge);
        }
        if !seen.insert(e.clone()) {
            log::warn!("line {}: duplicate edge {} collapsed", l.no, u.display(&e));
            continue;
        }
        edges.push(e);
    }
    Hypergraph::new(u, edges)
}

pub fn parse_graph(text: &str, allow_reserved: bool) -> Result<Graph> {
    let ls = lines(text, &["vertices", "edge"])?;
    let u = header(&ls, "vertices", allow_reserved)?;
    let mut pairs = Vec::new();
    for l in ls.iter().filter(|l| l.key == "edge") {
        let ix = lookup(&u, l)?;
        if ix.len() != 2 {
            return Err(parse_err(l.no, "`edge:` takes exactly two vertices"));
        }
        pairs.push((ix[0], ix[1]));
    }
    Graph::new(u, &pairs)
}

/// Sets over an existing universe, in file order.
pub fn parse_family(text: &str, universe: &Universe) -> Result<Vec<ElementSet>> {
    lines(text, &["set"])?
        .iter()
        .map(|l| Ok(ElementSet::from_indices(universe.len(), lookup(universe, l)?)))
        .collect()
}

pub fn set_line(universe: &Universe, set: &ElementSet) -> String {
    let names = universe.names(set);
    if names.is_empty() {
        "set:".to_owned()
    } else {
        format!("set: {}", names.join(" "))
    }
}

pub fn write_family<'a, I>(universe: &Universe, sets: I) -> String
where
    I: IntoIterator<Item = &'a ElementSet>,
{
    let mut out = String::new();
    for s in sets {
        out.push_str(&set_line(universe, s));
        out.push('\n');
    }
    out
}

/// Writes cover pairs only; parsing closes them again.
pub fn write_poset(p: &Poset) -> String {
    let u = p.universe();
    let mut out = format!("elements: {}\n", u.tokens().join(" "));
    for (a, b) in p.covers() {
        let _ = writeln!(out, "less: {} {}", u.token(a), u.token(b));
    }
    out
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let u = h.universe();
    let mut out = format!("vertices: {}\n", u.tokens().join(" "));
    for e in h.edges() {
        let _ = writeln!(out, "edge: {}", u.names(e).join(" "));
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    let u = g.universe();
    let mut out = format!("vertices: {}\n", u.tokens().join(" "));
    for (a, b) in g.edges() {
        let _ = writeln!(out, "edge: {} {}", u.token(a), u.token(b));
    }
    out
}
