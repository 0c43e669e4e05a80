//! Text formats: `.mg` edge lists, graph6 and corpus files.
//!
//! A `.mg` block is a header line `n m` (optionally followed by `pseudo` to
//! permit loops) and then `m` lines `u v` with 0-based endpoints. Repeated
//! lines are parallel edges and `u u` is a loop. Lines starting with `#` are
//! comments.

use std::fs;
use std::path::Path;

use crate::catalog::catalog;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedInput(msg.into())
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

/// `Some((n, m, pseudo))` if the line is a `.mg` header.
fn parse_header(line: &str) -> Option<(usize, usize, bool)> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    match tokens.as_slice() {
        [n, m] => Some((n.parse().ok()?, m.parse().ok()?, false)),
        [n, m, "pseudo"] => Some((n.parse().ok()?, m.parse().ok()?, true)),
        _ => None,
    }
}

fn parse_mg_lines<'a>(lines: &mut impl Iterator<Item = &'a str>) -> Result<MultiGraph> {
    let header = lines.next().ok_or_else(|| malformed("empty .mg input"))?;
    let (n, m, pseudo) = parse_header(header).ok_or_else(|| malformed(format!("bad .mg header `{header}`")))?;
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let line = lines.next().ok_or_else(|| malformed(format!("expected {m} edges, found {i}")))?;
        edges.push(parse_pair(line).ok_or_else(|| malformed(format!("bad edge line `{line}`")))?);
    }
    MultiGraph::new(n, edges, pseudo)
}

/// Parses exactly one `.mg` block.
pub fn parse_mg(text: &str) -> Result<MultiGraph> {
    let mut lines = content_lines(text);
    let g = parse_mg_lines(&mut lines)?;
    if let Some(extra) = lines.next() {
        return Err(malformed(format!("trailing content `{extra}`")));
    }
    Ok(g)
}

pub fn emit_mg(g: &MultiGraph) -> String {
    let mut out = format!("{} {}", g.vertex_count(), g.edge_count());
    if g.is_pseudo() {
        out.push_str(" pseudo");
    }
    out.push('\n');
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses one graph6 line. The graph must be cubic.
pub fn parse_graph6(line: &str) -> Result<MultiGraph> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() || bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(malformed(format!("`{line}` is not graph6")));
    }
    let (n, rest) = match bytes {
        [126, 126, r @ ..] if r.len() >= 6 => (r[..6].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize), &r[6..]),
        [126, r @ ..] if r.len() >= 3 => (r[..3].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize), &r[3..]),
        [b, r @ ..] if *b < 126 => ((b - 63) as usize, r),
        _ => return Err(malformed("truncated graph6 size")),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if rest.len() != pairs.div_ceil(6) {
        return Err(malformed(format!("graph6 body has {} bytes, expected {}", rest.len(), pairs.div_ceil(6))));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    MultiGraph::graph(n, edges)
}

/// graph6 encoding; only simple graphs can be written.
pub fn emit_graph6(g: &MultiGraph) -> Result<String> {
    if !g.is_simple() {
        return Err(malformed("graph6 cannot encode loops or parallel edges"));
    }
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    } else {
        out.push(126);
        out.push(126);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.multiplicity(i, j) > 0);
        }
    }
    for chunk in bits.chunks(6) {
        let mut b = 0u8;
        for (k, &on) in chunk.iter().enumerate() {
            if on {
                b |= 1 << (5 - k);
            }
        }
        out.push(b + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

/// Parses a graph given as `.mg` text or a single graph6 line.
pub fn parse_graph_text(text: &str) -> Result<MultiGraph> {
    let first = content_lines(text).next().ok_or_else(|| malformed("empty input"))?;
    if parse_header(first).is_some() {
        parse_mg(text)
    } else {
        parse_graph6(first)
    }
}

/// A corpus: graph6 lines and `.mg` blocks in any mix, in file order.
pub fn parse_corpus(text: &str) -> Result<Vec<MultiGraph>> {
    let mut lines = content_lines(text).peekable();
    let mut out = Vec::new();
    while let Some(&line) = lines.peek() {
        if parse_header(line).is_some() {
            out.push(parse_mg_lines(&mut lines)?);
        } else {
            lines.next();
            out.push(parse_graph6(line)?);
        }
    }
    Ok(out)
}

/// `.mg` blocks separated by blank lines.
pub fn emit_corpus(graphs: &[MultiGraph]) -> String {
    graphs.iter().map(emit_mg).collect::<Vec<_>>().join("\n")
}

/// A catalog name, or a path to a file holding one graph.
pub fn resolve_graph(spec: &str) -> Result<MultiGraph> {
    match catalog(spec) {
        Ok(g) => Ok(g),
        Err(Error::UnknownName(_)) if Path::new(spec).exists() => parse_graph_text(&fs::read_to_string(spec)?),
        Err(e) => Err(e),
    }
}
