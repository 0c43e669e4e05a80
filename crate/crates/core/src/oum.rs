//! Structure of simple bridgeless claw-free cubic graphs.
//!
//! Such a graph is K4, a ring of diamonds, or is obtained from a bridgeless
//! cubic multigraph `H` by replacing some edges with strings of diamonds and
//! then every vertex of `H` with a triangle.

use crate::catalog::{get, Named};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::iso::is_isomorphic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OumDecomposition {
    K4,
    Ring { diamonds: usize },
    Expansion {
        base: MultiGraph,
        /// `(edge of base, number of diamonds)`, by ascending edge
        strings: Vec<(usize, usize)>,
    },
}

impl OumDecomposition {
    /// Builds a graph with this structure.
    pub fn reconstruct(&self) -> Result<MultiGraph> {
        match self {
            OumDecomposition::K4 => Ok(get(Named::K4)),
            OumDecomposition::Ring { diamonds } => MultiGraph::ring_of_diamonds(*diamonds),
            OumDecomposition::Expansion { base, strings } => {
                let mut g = base.clone();
                // replacing an edge shifts the indices above it, so go downwards
                for &(e, k) in strings.iter().rev() {
                    g = g.replace_edge_with_diamond_string(e, k)?.graph;
                }
                let originals: Vec<usize> = (0..base.vertex_count()).collect();
                Ok(g.expand_vertices_to_triangles(&originals)?.graph)
            }
        }
    }
}

fn require(ok: bool, why: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(why.to_string()))
    }
}

/// Classifies a connected simple bridgeless claw-free cubic graph and checks
/// that the witness rebuilds it up to isomorphism.
pub fn oum_decompose(g: &MultiGraph) -> Result<OumDecomposition> {
    require(g.is_connected(), "graph is not connected")?;
    require(g.is_simple(), "graph is not simple")?;
    require(g.is_bridgeless(), "graph has a bridge")?;
    require(g.is_claw_free(), "graph has a claw")?;
    let found = classify(g)?;
    let rebuilt = found.reconstruct()?;
    if !is_isomorphic(&rebuilt, g) {
        return Err(Error::ProofAssertionFailed("decomposition does not rebuild the graph".into()));
    }
    Ok(found)
}

fn classify(g: &MultiGraph) -> Result<OumDecomposition> {
    if g.vertex_count() == 4 {
        return Ok(OumDecomposition::K4);
    }
    let strings = g.find_diamond_strings();
    let diamonds = g.find_diamonds();
    if strings.is_empty() && !diamonds.is_empty() && 4 * diamonds.len() == g.vertex_count() {
        return Ok(OumDecomposition::Ring { diamonds: diamonds.len() });
    }
    let mut removed = Vec::new();
    let mut joins = Vec::new();
    for s in &strings {
        removed.extend(s.vertices());
        joins.push((g.other_end(s.head_outer_edge, s.head()), g.other_end(s.tail_outer_edge, s.tail())));
    }
    let (rest, _, _) = g.remove_vertices_with_edges(&removed, &joins)?;
    let new_edges: Vec<usize> = (rest.edge_count() - joins.len()..rest.edge_count()).collect();

    // every remaining vertex must lie in exactly one triangle
    let n = rest.vertex_count();
    let mut tri_of = vec![usize::MAX; n];
    let mut in_triangle = vec![false; rest.edge_count()];
    let triangles = rest.find_triangles();
    for (i, t) in triangles.iter().enumerate() {
        for &v in &t.vertices {
            require(tri_of[v] == usize::MAX, "a vertex lies in two triangles")?;
            tri_of[v] = i;
        }
        for &e in &t.edges {
            in_triangle[e] = true;
        }
    }
    require(tri_of.iter().all(|&t| t != usize::MAX), "a vertex lies in no triangle or diamond")?;

    let mut base_edges = Vec::new();
    let mut strings_on = Vec::new();
    for e in 0..rest.edge_count() {
        if in_triangle[e] {
            continue;
        }
        let (u, v) = rest.endpoints(e);
        require(tri_of[u] != tri_of[v], "an edge joins two corners of one triangle")?;
        if let Some(j) = new_edges.iter().position(|&x| x == e) {
            strings_on.push((base_edges.len(), strings[j].len()));
        }
        base_edges.push((tri_of[u], tri_of[v]));
    }
    let base = MultiGraph::graph(triangles.len(), base_edges)?;
    Ok(OumDecomposition::Expansion { base, strings: strings_on })
}
