//! Exhaustive generation of small connected cubic graphs up to isomorphism.
//!
//! Every connected cubic pseudo-graph on `n ≥ 4` vertices arises from one on
//! `n − 2` vertices by one of two moves: subdivide two edge slots (possibly
//! the same edge twice) and join the new vertices, or subdivide an edge and
//! hang a new vertex carrying a loop from it. Generation therefore runs over
//! pseudo-graphs and filters at the end.

use std::collections::HashMap;

use crate::graph::MultiGraph;
use crate::iso::{invariant, is_isomorphic};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    /// loops and parallel edges allowed
    Pseudo,
    /// parallel edges allowed, no loops
    Multi,
    /// no loops, no parallel edges
    Simple,
}

impl GraphFamily {
    pub fn admits(self, g: &MultiGraph) -> bool {
        match self {
            GraphFamily::Pseudo => true,
            GraphFamily::Multi => !g.has_loops(),
            GraphFamily::Simple => g.is_simple(),
        }
    }
}

/// Isomorphism classes of graphs, kept in insertion order.
#[derive(Default)]
struct ClassSet {
    graphs: Vec<MultiGraph>,
    buckets: HashMap<Vec<u64>, Vec<usize>>,
}

impl ClassSet {
    fn insert(&mut self, g: MultiGraph) -> bool {
        let key = invariant(&g);
        let bucket = self.buckets.entry(key).or_default();
        if bucket.iter().any(|&i| is_isomorphic(&self.graphs[i], &g)) {
            return false;
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
        true
    }
}

fn subdivide(edges: &mut Vec<(usize, usize)>, e: usize, w: usize) {
    let (a, b) = edges[e];
    edges[e] = (a, w);
    edges.push((w, b));
}

fn children(g: &MultiGraph) -> Vec<MultiGraph> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let (x, y) = (n, n + 1);
    let mut out = Vec::new();
    for e1 in 0..m {
        for e2 in e1..m {
            let mut edges = g.edges().to_vec();
            if e1 == e2 {
                let (a, b) = edges[e1];
                edges[e1] = (a, x);
                edges.extend([(x, y), (y, b), (x, y)]);
            } else {
                subdivide(&mut edges, e1, x);
                subdivide(&mut edges, e2, y);
                edges.push((x, y));
            }
            out.push(MultiGraph::new(n + 2, edges, true).expect("moves keep degrees"));
        }
        let mut edges = g.edges().to_vec();
        subdivide(&mut edges, e1, x);
        edges.extend([(x, y), (y, y)]);
        out.push(MultiGraph::new(n + 2, edges, true).expect("moves keep degrees"));
    }
    out
}

/// Connected cubic pseudo-graphs on exactly `n` vertices for each even
/// `n ≤ max_n`, one per isomorphism class, indexed by `n / 2 - 1`.
fn pseudo_layers(max_n: usize) -> Vec<Vec<MultiGraph>> {
    let mut layers: Vec<Vec<MultiGraph>> = Vec::new();
    if max_n < 2 {
        return layers;
    }
    let theta = MultiGraph::new(2, vec![(0, 1); 3], true).expect("theta");
    let dumbbell = MultiGraph::new(2, vec![(0, 0), (0, 1), (1, 1)], true).expect("dumbbell");
    layers.push(vec![theta, dumbbell]);
    let mut n = 4;
    while n <= max_n {
        let mut set = ClassSet::default();
        for g in layers.last().expect("previous layer") {
            for child in children(g) {
                set.insert(child);
            }
        }
        layers.push(set.graphs);
        n += 2;
    }
    layers
}

/// All connected cubic graphs of `family` with `min_n ≤ n ≤ max_n`
/// vertices, ordered by vertex count, one per isomorphism class. Loopless
/// results are rebuilt as ordinary graphs.
pub fn connected_cubic(min_n: usize, max_n: usize, family: GraphFamily) -> Vec<MultiGraph> {
    pseudo_layers(max_n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| 2 * i + 2 >= min_n)
        .flat_map(|(_, layer)| layer)
        .filter(|g| family.admits(g))
        .map(|g| {
            if g.has_loops() {
                g
            } else {
                MultiGraph::graph(g.vertex_count(), g.edges().to_vec()).expect("loopless cubic")
            }
        })
        .collect()
}
