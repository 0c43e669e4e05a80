use crate::covers::{CoverKind, CoverList};
use crate::error::{Error, Result};
use crate::graph::{edge_between, DiamondString, EdgeCorrespondence, EdgeSubset, MultiGraph};

/// A smaller graph obtained by cutting out a digon or a diamond string and
/// joining its two outer neighbours by a new edge, together with the way back.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub graph: MultiGraph,
    pub edges: EdgeCorrespondence,
    /// the edge joining the two outer neighbours in the reduced graph
    pub new_edge: usize,
    pub lift: CoverLift,
}

/// Turns a perfect-matching cover of a reduced graph into one of the
/// original graph with the same number of parts.
#[derive(Clone, Debug)]
pub struct CoverLift {
    original: MultiGraph,
    back: Vec<Option<usize>>,
    new_edge: usize,
    /// original edges replacing the new edge in parts that contain it
    through: Vec<usize>,
    /// two local perfect matchings of the removed piece, used by the other
    /// parts; the first such part takes `alternatives[0]`, the rest `[1]`
    alternatives: [Vec<usize>; 2],
}

impl CoverLift {
    pub fn lift(&self, reduced: &MultiGraph, cover: &CoverList) -> Result<CoverList> {
        if cover.kind != CoverKind::PmCover {
            return Err(Error::InvalidCover(format!("expected a pm-cover, got {}", cover.kind.as_str())));
        }
        cover.verify(reduced)?;
        let m = self.original.edge_count();
        let mut seen_without = 0usize;
        let mut parts = Vec::with_capacity(cover.parts.len());
        for p in &cover.parts {
            let mut part = EdgeSubset::from_indices(m, p.iter().filter_map(|e| self.back[e]));
            let extra = if p.contains(self.new_edge) {
                &self.through
            } else {
                seen_without += 1;
                &self.alternatives[usize::from(seen_without > 1)]
            };
            for &e in extra {
                part.insert(e);
            }
            parts.push(part);
        }
        let out = CoverList::new(CoverKind::PmCover, parts);
        out.verify(&self.original)
            .map_err(|e| Error::ProofAssertionFailed(format!("lifted cover is invalid: {e}")))?;
        Ok(out)
    }
}

/// Removes the digon on `u`, `v` and joins their outer neighbours. When both
/// outer edges end at the same vertex the new edge is a loop and the reduced
/// graph is a pseudo-graph.
pub fn digon_reduction(g: &MultiGraph, u: usize, v: usize) -> Result<Reduction> {
    let n = g.vertex_count();
    for w in [u, v] {
        if w >= n {
            return Err(Error::BadIndex { index: w, limit: n });
        }
    }
    if u == v || g.multiplicity(u, v) != 2 {
        return Err(Error::NotADigon(format!("vertices {u} and {v} are not joined by exactly two edges")));
    }
    let digon: Vec<usize> = g.star(u).iter().copied().filter(|&e| g.other_end(e, u) == v).collect();
    let a = g.star(u).iter().copied().find(|e| !digon.contains(e)).expect("third edge at u");
    let b = g.star(v).iter().copied().find(|e| !digon.contains(e)).expect("third edge at v");
    let (ou, ov) = (g.other_end(a, u), g.other_end(b, v));
    reduce(g, &[u, v], (ou, ov), vec![a, b], [vec![digon[0]], vec![digon[1]]])
}

/// Removes a chain of diamonds and joins the outer neighbours of its head and
/// tail.
pub fn diamond_string_reduction(g: &MultiGraph, s: &DiamondString) -> Result<Reduction> {
    if s.is_empty() {
        return Err(Error::NotAString("no diamonds".into()));
    }
    let inside = s.vertices();
    if inside.iter().any(|&v| v >= g.vertex_count()) {
        return Err(Error::NotAString("vertex out of range".into()));
    }
    let single = |a: usize, b: usize| -> Result<usize> {
        if g.multiplicity(a, b) != 1 {
            return Err(Error::NotAString(format!("vertices {a} and {b} are not joined by a single edge")));
        }
        Ok(edge_between(g, a, b).expect("edge exists"))
    };
    let mut through = Vec::new();
    let mut alt = [Vec::new(), Vec::new()];
    for (i, d) in s.diamonds.iter().enumerate() {
        let [x, y] = d.tips;
        let [p, q] = d.middle;
        if g.multiplicity(x, y) != 0 {
            return Err(Error::NotAString(format!("tips {x} and {y} are adjacent")));
        }
        through.push(single(p, q)?);
        alt[0].extend([single(x, p)?, single(y, q)?]);
        alt[1].extend([single(x, q)?, single(y, p)?]);
        if let Some(next) = s.diamonds.get(i + 1) {
            through.push(single(y, next.tips[0])?);
        }
    }
    let outer = |e: usize, end: usize, what: &str| -> Result<usize> {
        if e >= g.edge_count() {
            return Err(Error::NotAString(format!("{what} edge {e} out of range")));
        }
        let (a, b) = g.endpoints(e);
        if a != end && b != end {
            return Err(Error::NotAString(format!("{what} edge {e} does not leave vertex {end}")));
        }
        let w = g.other_end(e, end);
        if inside.contains(&w) {
            return Err(Error::NotAString(format!("{what} edge {e} stays inside the string")));
        }
        Ok(w)
    };
    let ou = outer(s.head_outer_edge, s.head(), "head")?;
    let ov = outer(s.tail_outer_edge, s.tail(), "tail")?;
    if ou == ov {
        return Err(Error::NotAString(format!("head and tail both attach to vertex {ou}")));
    }
    through.extend([s.head_outer_edge, s.tail_outer_edge]);
    reduce(g, &inside, (ou, ov), through, alt)
}

fn reduce(
    g: &MultiGraph,
    removed: &[usize],
    join: (usize, usize),
    through: Vec<usize>,
    alternatives: [Vec<usize>; 2],
) -> Result<Reduction> {
    let (graph, edges, _) = g.remove_vertices_with_edges(removed, &[join])?;
    let new_edge = graph.edge_count() - 1;
    let lift = CoverLift { original: g.clone(), back: edges.inverse(), new_edge, through, alternatives };
    Ok(Reduction { graph, edges, new_edge, lift })
}
