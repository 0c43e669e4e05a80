//! Colorings that leave some target edges unused, and what they force.

use crate::catalog::{get, p12_triangle, Named, P12_CUT};
use crate::covers::{chromatic_index_cubic, enumerate_perfect_matchings, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, MultiGraph};
use crate::hcoloring::{preimage, unused_edges, verify_hcoloring, EdgeMap};

/// Two perfect matchings of P10 meeting exactly in `e`.
fn p10_pair_through(e: usize) -> Option<(EdgeSubset, EdgeSubset)> {
    pair_meeting_in(&enumerate_perfect_matchings(&get(Named::P10)), e, |_, _| true)
}

fn pair_meeting_in(
    pms: &[EdgeSubset],
    e: usize,
    accept: impl Fn(&EdgeSubset, &EdgeSubset) -> bool,
) -> Option<(EdgeSubset, EdgeSubset)> {
    for (i, a) in pms.iter().enumerate() {
        for b in &pms[i + 1..] {
            let common = a.intersection(b);
            if common.len() == 1 && common.contains(e) {
                if accept(a, b) {
                    return Some((a.clone(), b.clone()));
                }
                if accept(b, a) {
                    return Some((b.clone(), a.clone()));
                }
            }
        }
    }
    None
}

/// A P10-coloring that misses edge `e` gives a proper 3-edge-coloring: take
/// perfect matchings `M1`, `M2` of P10 with `M1 ∩ M2 = {e}`; their preimages
/// are disjoint perfect matchings and the remaining edges form a third.
pub fn three_coloring_from_deficient_p10_coloring(g: &MultiGraph, f: &EdgeMap, e: usize) -> Result<EdgeColoring> {
    let p10 = get(Named::P10);
    verify_hcoloring(g, &p10, f)?;
    if e >= p10.edge_count() || !unused_edges(f).contains(e) {
        return Err(Error::PreconditionViolated(format!("edge {e} of P10 is used by the coloring")));
    }
    let (m1, m2) = p10_pair_through(e).ok_or(Error::NoSuchPmPair(e))?;
    let (c0, c1) = (preimage(f, &m1), preimage(f, &m2));
    let colors = (0..g.edge_count())
        .map(|x| if c0.contains(x) { 0 } else if c1.contains(x) { 1 } else { 2 })
        .collect();
    let coloring = EdgeColoring { k: 3, colors };
    coloring
        .check_proper(g)
        .map_err(|err| Error::ProofAssertionFailed(format!("derived 3-edge-coloring is not proper: {err}")))?;
    Ok(coloring)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PmPairCase {
    /// `e` is away from the triangle; both matchings meet the cut in one edge
    OutsideCut,
    /// `e` is a cut edge; one matching meets the cut once, the other in all
    /// three edges
    InCut,
}

#[derive(Clone, Debug)]
pub struct PmPair {
    pub case: PmPairCase,
    pub first: EdgeSubset,
    pub second: EdgeSubset,
}

/// Perfect matchings `N1`, `N2` of P12 with `N1 ∩ N2 = {e}`.
pub fn p12_pm_pair_for_edge(e: usize) -> Result<PmPair> {
    let p12 = get(Named::P12);
    if e >= p12.edge_count() {
        return Err(Error::BadIndex { index: e, limit: p12.edge_count() });
    }
    if p12_triangle().edges.contains(&e) {
        return Err(Error::EdgeInTriangle(e));
    }
    let cut = EdgeSubset::from_edges(&p12, P12_CUT);
    let meet = |m: &EdgeSubset| m.intersection(&cut).len();
    let pms = enumerate_perfect_matchings(&p12);
    let (case, found) = if P12_CUT.contains(&e) {
        (PmPairCase::InCut, pair_meeting_in(&pms, e, |a, b| meet(a) == 1 && meet(b) == 3))
    } else {
        (PmPairCase::OutsideCut, pair_meeting_in(&pms, e, |a, b| meet(a) == 1 && meet(b) == 1))
    };
    let (first, second) = found.ok_or(Error::NoSuchPmPair(e))?;
    Ok(PmPair { case, first, second })
}

/// A graph with a P12-coloring that never uses the triangle of P12.
#[derive(Clone, Debug)]
pub struct FictiveConstruction {
    pub graph: MultiGraph,
    pub coloring: EdgeMap,
}

/// Vertices of P10 − 0 that lost a neighbour, one per color.
const PORTS: [usize; 3] = [1, 4, 5];

/// Replaces every vertex of `h` by a copy of P10 minus a vertex and joins the
/// copies along the edges of `h`, using the edge's color to pick the port.
/// Inside a copy every edge is colored by itself; a joining edge of color `c`
/// is colored by the `c`-th cut edge of P12.
pub fn construct_fictive_triangle(h: &MultiGraph, coloring: Option<&EdgeColoring>) -> Result<FictiveConstruction> {
    if h.has_loops() {
        return Err(Error::NotThreeColorable);
    }
    let coloring = match coloring {
        Some(c) => {
            if c.k != 3 || c.check_proper(h).is_err() {
                return Err(Error::NotThreeColorable);
            }
            c.clone()
        }
        None => chromatic_index_cubic(h).coloring.ok_or(Error::NotThreeColorable)?,
    };
    let p10 = get(Named::P10);
    let inner: Vec<usize> = (0..p10.edge_count()).filter(|&e| !p10.star(0).contains(&e)).collect();
    let local = |copy: usize, v: usize| 9 * copy + v - 1;
    let mut edges = Vec::with_capacity(12 * h.vertex_count() + h.edge_count());
    let mut images = Vec::with_capacity(edges.capacity());
    for copy in 0..h.vertex_count() {
        for &e in &inner {
            let (a, b) = p10.endpoints(e);
            edges.push((local(copy, a), local(copy, b)));
            images.push(e);
        }
    }
    for e in 0..h.edge_count() {
        let (x, y) = h.endpoints(e);
        let c = coloring.colors[e];
        edges.push((local(x, PORTS[c]), local(y, PORTS[c])));
        images.push(P12_CUT[c]);
    }
    let graph = MultiGraph::graph(9 * h.vertex_count(), edges)?;
    let f = EdgeMap::new(images, 18);
    verify_hcoloring(&graph, &get(Named::P12), &f)
        .map_err(|e| Error::ProofAssertionFailed(format!("construction is not a P12-coloring: {e}")))?;
    Ok(FictiveConstruction { graph, coloring: f })
}
