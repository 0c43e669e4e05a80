use std::collections::VecDeque;

use crate::graph::{EdgeSubset, MultiGraph};

/// `|E| − |V| + c`, the dimension of the cycle space over GF(2).
pub fn cycle_space_dimension(g: &MultiGraph) -> usize {
    g.edge_count() + g.components().len() - g.vertex_count()
}

/// Fundamental cycles of a breadth-first spanning forest, one per non-tree
/// edge in index order.
pub fn cycle_space_basis(g: &MultiGraph) -> Vec<EdgeSubset> {
    let n = g.vertex_count();
    let mut parent_edge = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut tree = vec![false; g.edge_count()];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &e in g.star(v) {
                let w = g.other_end(e, v);
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent_edge[w] = e;
                    tree[e] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut basis = Vec::new();
    for e in (0..g.edge_count()).filter(|&e| !tree[e]) {
        let mut cycle = EdgeSubset::from_edges(g, [e]);
        let (mut a, mut b) = g.endpoints(e);
        while a != b {
            if depth[a] < depth[b] {
                std::mem::swap(&mut a, &mut b);
            }
            let pe = parent_edge[a];
            cycle.insert(pe);
            a = g.other_end(pe, a);
        }
        basis.push(cycle);
    }
    basis
}

/// Every even subgraph, or `None` if the cycle space has more than
/// `max_dim` dimensions. Enumerated in Gray-code order from the empty set.
pub fn even_subgraphs(g: &MultiGraph, max_dim: usize) -> Option<Vec<EdgeSubset>> {
    let basis = cycle_space_basis(g);
    if basis.len() > max_dim {
        return None;
    }
    let mut current = EdgeSubset::empty(g.edge_count());
    let mut out = Vec::with_capacity(1 << basis.len());
    out.push(current.clone());
    for i in 1u64..(1 << basis.len()) {
        current.symmetric_difference_with(&basis[i.trailing_zeros() as usize]);
        out.push(current.clone());
    }
    Some(out)
}
