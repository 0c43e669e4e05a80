//! H-colorings: edge maps `f: E(G) → E(H)` sending every vertex star of `G`
//! onto a vertex star of `H`. When one exists we write `H ≺ G`.

mod fictive;
mod solver;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Contraction, EdgeSubset, MultiGraph, TriangleRef};

pub use fictive::{
    construct_fictive_triangle, p12_pm_pair_for_edge, three_coloring_from_deficient_p10_coloring, FictiveConstruction,
    PmPair, PmPairCase,
};
pub use solver::{solve_hcoloring, EdgeOrder, SolverOptions};

/// A total map from the edges of a source graph to the edges of a target.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeMap {
    pub assignment: Vec<usize>,
    pub target_edges: usize,
}

impl EdgeMap {
    pub fn new(assignment: Vec<usize>, target_edges: usize) -> Self {
        EdgeMap { assignment, target_edges }
    }

    pub fn identity(g: &MultiGraph) -> Self {
        EdgeMap::new((0..g.edge_count()).collect(), g.edge_count())
    }

    pub fn get(&self, e: usize) -> usize {
        self.assignment[e]
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }
}

/// Vertex stars of `h` keyed by their sorted edge triple.
pub(crate) fn star_index(h: &MultiGraph) -> HashMap<[usize; 3], usize> {
    (0..h.vertex_count())
        .filter_map(|y| {
            let s = h.star(y);
            (s.len() == 3).then(|| ([s[0], s[1], s[2]], y))
        })
        .collect()
}

/// Checks the star condition vertex by vertex and reports the first vertex
/// whose star does not map onto a star of `h`.
pub fn verify_hcoloring(g: &MultiGraph, h: &MultiGraph, f: &EdgeMap) -> Result<()> {
    if f.assignment.len() != g.edge_count() {
        return Err(Error::PartialMap(format!(
            "{} images for {} source edges",
            f.assignment.len(),
            g.edge_count()
        )));
    }
    if f.target_edges != h.edge_count() {
        return Err(Error::PartialMap(format!(
            "map targets {} edges, graph has {}",
            f.target_edges,
            h.edge_count()
        )));
    }
    if let Some(&bad) = f.assignment.iter().find(|&&t| t >= h.edge_count()) {
        return Err(Error::PartialMap(format!("image {bad} is not an edge of the target")));
    }
    let stars = star_index(h);
    for x in 0..g.vertex_count() {
        let mut image: Vec<usize> = g.star(x).iter().map(|&e| f.assignment[e]).collect();
        image.sort_unstable();
        let ok = image.len() == 3 && stars.contains_key(&[image[0], image[1], image[2]]);
        if !ok {
            return Err(Error::NotAnHColoring { vertex: x, image });
        }
    }
    Ok(())
}

pub fn is_hcoloring(g: &MultiGraph, h: &MultiGraph, f: &EdgeMap) -> bool {
    verify_hcoloring(g, h, f).is_ok()
}

/// For each source vertex, the target vertex whose star it maps onto.
pub fn vertex_images(g: &MultiGraph, h: &MultiGraph, f: &EdgeMap) -> Result<Vec<usize>> {
    verify_hcoloring(g, h, f)?;
    let stars = star_index(h);
    Ok((0..g.vertex_count())
        .map(|x| {
            let mut image: Vec<usize> = g.star(x).iter().map(|&e| f.assignment[e]).collect();
            image.sort_unstable();
            stars[&[image[0], image[1], image[2]]]
        })
        .collect())
}

/// Source edges whose image lies in `s`.
pub fn preimage(f: &EdgeMap, s: &EdgeSubset) -> EdgeSubset {
    EdgeSubset::from_indices(f.len(), (0..f.len()).filter(|&e| s.contains(f.assignment[e])))
}

/// `f2 ∘ f1`: first `f1: G → H`, then `f2: H → K`.
pub fn compose(f1: &EdgeMap, f2: &EdgeMap) -> Result<EdgeMap> {
    if f1.target_edges != f2.assignment.len() {
        return Err(Error::ChainMismatch(format!(
            "first map targets {} edges, second map has {} source edges",
            f1.target_edges,
            f2.assignment.len()
        )));
    }
    Ok(EdgeMap::new(f1.assignment.iter().map(|&e| f2.assignment[e]).collect(), f2.target_edges))
}

/// Target edges with empty preimage.
pub fn unused_edges(f: &EdgeMap) -> EdgeSubset {
    EdgeSubset::from_indices(f.target_edges, f.assignment.iter().copied()).complement()
}

/// Which of the two graphs colors the other. `GColorsH` means the edges of
/// `g` can color `h`, i.e. `h` admits a `g`-coloring and `g ≺ h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Comparability {
    GColorsH,
    HColorsG,
    Both,
    Neither,
}

pub fn comparable(g: &MultiGraph, h: &MultiGraph, opts: &SolverOptions) -> Result<Comparability> {
    let g_colors_h = solve_hcoloring(h, g, opts)?.is_some();
    let h_colors_g = solve_hcoloring(g, h, opts)?.is_some();
    Ok(match (g_colors_h, h_colors_g) {
        (true, true) => Comparability::Both,
        (true, false) => Comparability::GColorsH,
        (false, true) => Comparability::HColorsG,
        (false, false) => Comparability::Neither,
    })
}

/// Contracting a contractible triangle gives a coloring of `g` by the
/// contracted graph: each triangle edge takes the image of its opposite edge.
pub fn contraction_coloring(g: &MultiGraph, t: &TriangleRef) -> Result<(Contraction, EdgeMap)> {
    if !g.is_contractible(t)? {
        return Err(Error::NotContractible(t.edges));
    }
    let c = g.contract_triangle(t)?;
    let assignment = (0..g.edge_count())
        .map(|e| {
            let source = if t.edges.contains(&e) { g.opposite_edge(t, e)? } else { e };
            Ok(c.edges.get(source).expect("cut edges survive contraction"))
        })
        .collect::<Result<Vec<_>>>()?;
    let f = EdgeMap::new(assignment, c.graph.edge_count());
    verify_hcoloring(g, &c.graph, &f)?;
    Ok((c, f))
}
