//! Normal edge colorings: proper colorings in which every edge is poor (its
//! neighbourhood shows three colors) or rich (five colors).

use serde::{Deserialize, Serialize};

use crate::catalog::{get, Named};
use crate::covers::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{constrained_edge_order, MultiGraph};
use crate::hcoloring::{solve_hcoloring, verify_hcoloring, EdgeMap, SolverOptions};

/// Upper bound on the normal chromatic index of a bridgeless cubic graph;
/// graphs with no normal coloring up to this many colors have none at all.
pub const MAX_NORMAL_COLORS: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeClass {
    Poor,
    Rich,
    Neither,
}

/// Distinct edges at either end of `e`, `e` included.
fn neighbourhood(g: &MultiGraph, e: usize) -> Vec<usize> {
    let (u, v) = g.endpoints(e);
    let mut out: Vec<usize> = g.star(u).iter().chain(g.star(v)).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn class_of(distinct_colors: usize) -> EdgeClass {
    match distinct_colors {
        3 => EdgeClass::Poor,
        5 => EdgeClass::Rich,
        _ => EdgeClass::Neither,
    }
}

/// Classifies `e` under a proper coloring by the number of colors on the
/// edges meeting its ends.
pub fn classify_edge(g: &MultiGraph, c: &EdgeColoring, e: usize) -> Result<EdgeClass> {
    c.check_proper(g)?;
    if e >= g.edge_count() {
        return Err(Error::BadIndex { index: e, limit: g.edge_count() });
    }
    let mut colors: Vec<usize> = neighbourhood(g, e).into_iter().map(|f| c.colors[f]).collect();
    colors.sort_unstable();
    colors.dedup();
    Ok(class_of(colors.len()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalColoring {
    pub coloring: EdgeColoring,
    pub classes: Vec<EdgeClass>,
}

impl NormalColoring {
    /// Classifies every edge and fails on the first that is neither poor nor
    /// rich.
    pub fn from_coloring(g: &MultiGraph, coloring: EdgeColoring) -> Result<Self> {
        let classes = (0..g.edge_count())
            .map(|e| classify_edge(g, &coloring, e))
            .collect::<Result<Vec<_>>>()?;
        if let Some(e) = classes.iter().position(|&c| c == EdgeClass::Neither) {
            return Err(Error::NotNormal(e));
        }
        Ok(NormalColoring { coloring, classes })
    }

    pub fn k(&self) -> usize {
        self.coloring.k
    }

    /// Re-checks properness, normality and the stored classes.
    pub fn verify(&self, g: &MultiGraph) -> Result<()> {
        let fresh = NormalColoring::from_coloring(g, self.coloring.clone())?;
        if fresh.classes != self.classes {
            let e = fresh.classes.iter().zip(&self.classes).position(|(a, b)| a != b).unwrap_or(0);
            return Err(Error::NotNormal(e));
        }
        Ok(())
    }

    pub fn rich_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.classes.iter().enumerate().filter(|(_, &c)| c == EdgeClass::Rich).map(|(e, _)| e)
    }
}

struct NormalSearch<'a> {
    g: &'a MultiGraph,
    k: usize,
    order: Vec<usize>,
    colors: Vec<usize>,
    hoods: Vec<Vec<usize>>,
    /// edges whose neighbourhood contains the given edge
    watchers: Vec<Vec<usize>>,
}

const NONE: usize = usize::MAX;

impl NormalSearch<'_> {
    fn proper_at(&self, e: usize) -> bool {
        let (u, v) = self.g.endpoints(e);
        let c = self.colors[e];
        [u, v].iter().all(|&x| self.g.star(x).iter().all(|&f| f == e || self.colors[f] != c))
    }

    /// Can the edge `f` still end up poor or rich?
    fn open(&self, f: usize) -> bool {
        let hood = &self.hoods[f];
        let mut seen = 0u64;
        let mut free = 0;
        for &x in hood {
            match self.colors[x] {
                NONE => free += 1,
                c => seen |= 1 << c,
            }
        }
        let c = seen.count_ones() as usize;
        (c <= 3 && 3 <= c + free) || (hood.len() >= 5 && c <= 5 && 5 <= c + free)
    }

    fn run(&mut self, i: usize, used: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let e = self.order[i];
        for c in 0..self.k.min(used + 1) {
            self.colors[e] = c;
            if self.proper_at(e) && self.watchers[e].iter().all(|&f| self.open(f)) && self.run(i + 1, used.max(c + 1)) {
                return true;
            }
        }
        self.colors[e] = NONE;
        false
    }
}

/// A normal coloring with at most `k` colors, if one exists.
pub fn solve_normal(g: &MultiGraph, k: usize) -> Option<NormalColoring> {
    if g.has_loops() || k == 0 || k > 64 {
        return None;
    }
    let hoods: Vec<Vec<usize>> = (0..g.edge_count()).map(|e| neighbourhood(g, e)).collect();
    let mut watchers = vec![Vec::new(); g.edge_count()];
    for (f, hood) in hoods.iter().enumerate() {
        for &x in hood {
            watchers[x].push(f);
        }
    }
    let mut s = NormalSearch {
        g,
        k,
        order: constrained_edge_order(g),
        colors: vec![NONE; g.edge_count()],
        hoods,
        watchers,
    };
    if !s.run(0, 0) {
        return None;
    }
    let result = NormalColoring::from_coloring(g, EdgeColoring { k, colors: s.colors });
    debug_assert!(result.is_ok());
    result.ok()
}

/// The least `k ≤ 7` with a normal `k`-edge-coloring, with its witness.
pub fn normal_chromatic_index(g: &MultiGraph) -> Option<NormalColoring> {
    (3..=MAX_NORMAL_COLORS).find_map(|k| solve_normal(g, k))
}

/// Both sides of "normal 5-edge-coloring exists iff P10 colors the graph".
#[derive(Clone, Debug)]
pub struct JaegerReport {
    pub normal: Option<NormalColoring>,
    pub p10_coloring: Option<EdgeMap>,
}

pub fn jaeger_check(g: &MultiGraph, opts: &SolverOptions) -> Result<JaegerReport> {
    let normal = (3..=5).find_map(|k| solve_normal(g, k));
    let p10_coloring = solve_hcoloring(g, &get(Named::P10), opts)?;
    if normal.is_some() != p10_coloring.is_some() {
        return Err(Error::EquivalenceViolation(format!(
            "normal coloring with at most 5 colors {}, P10-coloring {}",
            if normal.is_some() { "found" } else { "absent" },
            if p10_coloring.is_some() { "found" } else { "absent" }
        )));
    }
    Ok(JaegerReport { normal, p10_coloring })
}

/// Pulls a normal coloring of `h` back along an `h`-coloring of `g`.
pub fn induced_normal_coloring(g: &MultiGraph, h: &MultiGraph, f: &EdgeMap, c: &NormalColoring) -> Result<NormalColoring> {
    verify_hcoloring(g, h, f)?;
    c.verify(h)?;
    let colors = f.assignment.iter().map(|&t| c.coloring.colors[t]).collect();
    NormalColoring::from_coloring(g, EdgeColoring { k: c.k(), colors })
        .map_err(|e| Error::ProofAssertionFailed(format!("induced coloring is not normal: {e}")))
}
