//! Covers as edge labellings. A cover by `p` spanning subgraphs is the same
//! as giving each edge the set of parts it lies in; the degree conditions on
//! the parts become a parity condition per vertex and part.

use crate::covers::{CoverKind, CoverList, EdgeColoring};
use crate::graph::{constrained_edge_order, EdgeSubset, MultiGraph};

struct LabelProblem {
    parts: usize,
    /// allowed labels as bitmasks over parts
    domain: Vec<u8>,
    /// every part must have odd degree at every vertex (else even)
    odd: bool,
}

struct LabelSearch<'a> {
    g: &'a MultiGraph,
    p: &'a LabelProblem,
    order: Vec<usize>,
    labels: Vec<u8>,
    /// per vertex, bitmask of parts whose current degree is odd
    parity: Vec<u8>,
    remaining: Vec<usize>,
    max_label: usize,
}

impl LabelSearch<'_> {
    fn wrong(&self, v: usize) -> usize {
        let all = (1u16 << self.p.parts) as u8 - 1;
        let odd = self.parity[v] & all;
        (if self.p.odd { all & !odd } else { odd }).count_ones() as usize
    }

    fn feasible(&self, v: usize) -> bool {
        self.wrong(v) <= self.max_label * self.remaining[v]
            && (self.remaining[v] > 0 || self.wrong(v) == 0)
    }

    fn apply(&mut self, e: usize, label: u8) {
        let (a, b) = self.g.endpoints(e);
        self.labels[e] = label;
        if a != b {
            self.parity[a] ^= label;
            self.parity[b] ^= label;
        }
        self.remaining[a] -= 1;
        if a != b {
            self.remaining[b] -= 1;
        }
    }

    fn undo(&mut self, e: usize) {
        let label = self.labels[e];
        let (a, b) = self.g.endpoints(e);
        if a != b {
            self.parity[a] ^= label;
            self.parity[b] ^= label;
        }
        self.remaining[a] += 1;
        if a != b {
            self.remaining[b] += 1;
        }
        self.labels[e] = 0;
    }

    /// Parts are interchangeable, so a label may only introduce the lowest
    /// unused parts.
    fn canonical(label: u8, used: usize) -> bool {
        let fresh = label >> used;
        fresh & (fresh + 1) == 0
    }

    fn run(&mut self, i: usize, used: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let e = self.order[i];
        let (a, b) = self.g.endpoints(e);
        for li in 0..self.p.domain.len() {
            let label = self.p.domain[li];
            if !Self::canonical(label, used) {
                continue;
            }
            self.apply(e, label);
            if self.feasible(a) && self.feasible(b) {
                let used_next = used.max(8 - label.leading_zeros() as usize);
                if self.run(i + 1, used_next) {
                    return true;
                }
            }
            self.undo(e);
        }
        false
    }
}

fn solve_labels(g: &MultiGraph, p: &LabelProblem) -> Option<Vec<u8>> {
    let mut s = LabelSearch {
        g,
        p,
        order: constrained_edge_order(g),
        labels: vec![0; g.edge_count()],
        parity: vec![0; g.vertex_count()],
        remaining: (0..g.vertex_count()).map(|v| g.star(v).len()).collect(),
        max_label: p.domain.iter().map(|l| l.count_ones() as usize).max().unwrap_or(0),
    };
    if s.run(0, 0) {
        Some(s.labels)
    } else {
        None
    }
}

fn labels_to_parts(g: &MultiGraph, labels: &[u8], parts: usize) -> Vec<EdgeSubset> {
    (0..parts)
        .map(|i| EdgeSubset::from_edges(g, (0..labels.len()).filter(|&e| labels[e] >> i & 1 == 1)))
        .collect()
}

/// Labels of the given sizes over `parts` parts, smallest first.
fn subsets(parts: usize, sizes: &[u32]) -> Vec<u8> {
    let mut out: Vec<u8> = (1u8..(1 << parts)).filter(|m| sizes.contains(&m.count_ones())).collect();
    out.sort_by_key(|m| (m.count_ones(), *m));
    out
}

/// Chromatic index of a cubic graph: 3 with a witness if a proper
/// 3-edge-coloring exists, 4 otherwise. Graphs with loops report 4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticIndex {
    pub index: usize,
    pub coloring: Option<EdgeColoring>,
}

pub fn chromatic_index_cubic(g: &MultiGraph) -> ChromaticIndex {
    let problem = LabelProblem { parts: 3, domain: vec![1, 2, 4], odd: true };
    let found = if g.has_loops() { None } else { solve_labels(g, &problem) };
    match found {
        Some(labels) => {
            let colors = labels.iter().map(|&l| l.trailing_zeros() as usize).collect();
            let coloring = EdgeColoring { k: 3, colors };
            debug_assert!(coloring.check_proper(g).is_ok());
            ChromaticIndex { index: 3, coloring: Some(coloring) }
        }
        None => ChromaticIndex { index: 4, coloring: None },
    }
}

/// Five even subgraphs, possibly empty, covering each edge exactly twice.
pub fn find_even_cover_5_2(g: &MultiGraph) -> Option<CoverList> {
    let problem = LabelProblem { parts: 5, domain: subsets(5, &[2]), odd: false };
    let labels = solve_labels(g, &problem)?;
    let cover = CoverList::new(CoverKind::Even52, labels_to_parts(g, &labels, 5));
    debug_assert!(cover.verify(g).is_ok());
    Some(cover)
}

/// Four joins covering each edge once or twice.
pub fn find_parity_cover_4(g: &MultiGraph) -> Option<CoverList> {
    let problem = LabelProblem { parts: 4, domain: subsets(4, &[1, 2]), odd: true };
    let labels = solve_labels(g, &problem)?;
    let cover = CoverList::new(CoverKind::Parity4, labels_to_parts(g, &labels, 4));
    debug_assert!(cover.verify(g).is_ok());
    Some(cover)
}
