use crate::covers::{CoverKind, CoverList};
use crate::error::{Error, Result};
use crate::graph::{Contraction, EdgeSubset, Expansion, MultiGraph, TriangleRef};

/// Pushes a (5,2)-even cover of `g` through the contraction of `t`.
///
/// The parts are first renamed so that the three cut edges lie in parts
/// {0,1}, {0,2} and {1,2} (in the order of `t.vertices`) and parts 3 and 4
/// miss the cut; restricting every part to the contracted graph then keeps
/// each part even.
pub fn descend_even_cover_through_triangle(
    g: &MultiGraph,
    t: &TriangleRef,
    cover: &CoverList,
) -> Result<(Contraction, CoverList)> {
    if cover.kind != CoverKind::Even52 {
        return Err(Error::InvalidCover(format!("expected an even52 cover, got {}", cover.kind.as_str())));
    }
    cover.verify(g)?;
    if !g.is_contractible(t)? {
        return Err(Error::NotContractible(t.edges));
    }
    let cut = g.triangle_cut(t);
    let wanted: [[usize; 2]; 3] = [[0, 1], [0, 2], [1, 2]];
    let mut perm = [0usize, 1, 2, 3, 4];
    let renamed = loop {
        // perm[new] = old
        let fits = cut.iter().zip(&wanted).all(|(&f, w)| w.iter().all(|&p| cover.parts[perm[p]].contains(f)));
        if fits {
            break Some(perm);
        }
        if !next_permutation(&mut perm) {
            break None;
        }
    };
    let perm = renamed.ok_or(Error::NoValidRenaming)?;
    let contraction = g.contract_triangle(t)?;
    let parts = perm.iter().map(|&old| contraction.edges.forward(&cover.parts[old])).collect();
    let out = CoverList::new(CoverKind::Even52, parts);
    out.verify(&contraction.graph)
        .map_err(|e| Error::ProofAssertionFailed(format!("descended cover is invalid: {e}")))?;
    Ok((contraction, out))
}

/// Rearranges into the next permutation in lexicographic order; false after
/// the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("a larger element exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Four perfect matchings covering the expansion of every vertex of `h`.
#[derive(Clone, Debug)]
pub struct JoinLift {
    pub expansion: Expansion,
    pub cover: CoverList,
}

/// Extends a cover of `h` by four joins to a cover of the full triangle
/// expansion of `h` by four perfect matchings.
///
/// At each vertex a join uses either one or all three edges. If it uses one
/// inherited edge, the triangle edge opposite that corner is added; if it uses
/// all three, the triangle contributes nothing.
pub fn lift_join_cover_to_triangle_expansion(h: &MultiGraph, cover: &CoverList) -> Result<JoinLift> {
    if cover.kind != CoverKind::Parity4 {
        return Err(Error::BadJoinConfiguration(format!("expected a parity4 cover, got {}", cover.kind.as_str())));
    }
    cover.verify(h).map_err(|e| Error::BadJoinConfiguration(e.to_string()))?;
    let expansion = h.expand_all()?;
    let m = expansion.graph.edge_count();
    let mut parts = Vec::with_capacity(4);
    for (j, join) in cover.parts.iter().enumerate() {
        let mut part = EdgeSubset::from_indices(m, join.iter().filter_map(|e| expansion.edges.get(e)));
        for tv in &expansion.triangles {
            let hits: Vec<usize> = (0..3).filter(|&k| join.contains(tv.inherited[k])).collect();
            match hits.len() {
                1 => part.insert(tv.triangle_edges[hits[0]]),
                3 => {}
                c => {
                    return Err(Error::BadJoinConfiguration(format!(
                        "join {j} meets vertex {} in {c} edges",
                        tv.original
                    )))
                }
            }
        }
        parts.push(part);
    }
    let out = CoverList::new(CoverKind::PmCover, parts);
    out.verify(&expansion.graph)
        .map_err(|e| Error::ProofAssertionFailed(format!("lifted cover is invalid: {e}")))?;
    Ok(JoinLift { expansion, cover: out })
}
