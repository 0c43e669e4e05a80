//! Complete backtracking search for H-colorings.
//!
//! Edges of the source are assigned in a fixed order. Each source vertex keeps
//! the set of target vertices whose star it may still map onto; assigning an
//! edge intersects the sets at both ends with the endpoints of its image.
//! Neighbouring unassigned edges are checked for a remaining value after
//! every step.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{constrained_edge_order, dfs_edge_order, MultiGraph};
use crate::hcoloring::{verify_hcoloring, EdgeMap};
use crate::iso::edge_orbit_representatives;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeOrder {
    /// depth-first over the line graph from edge 0
    #[default]
    Dfs,
    /// ascending edge index
    Index,
    /// most already-ordered neighbours first
    Constrained,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverOptions {
    pub edge_order: EdgeOrder,
    /// For triangle-free targets, check only that adjacent edges get distinct
    /// adjacent images.
    pub triangle_free_shortcut: bool,
    /// Maximum number of edge assignments tried; `None` is unlimited.
    pub node_budget: Option<u64>,
    /// Shuffles the value order.
    pub seed: Option<u64>,
    /// Restricts the first edge to one image per edge orbit of the target.
    pub symmetry_breaking: bool,
}

const UNSET: usize = usize::MAX;

/// Decides whether `g` admits an `h`-coloring. `Ok(None)` is an exhaustive
/// refutation; running out of budget is an error instead.
pub fn solve_hcoloring(g: &MultiGraph, h: &MultiGraph, opts: &SolverOptions) -> Result<Option<EdgeMap>> {
    if h.vertex_count() > 128 {
        return Err(Error::TargetTooLarge(h.vertex_count()));
    }
    if g.has_loops() || h.has_loops() {
        return Err(Error::PreconditionViolated("H-coloring needs loopless graphs".into()));
    }
    if g.edge_count() == 0 {
        return Ok(Some(EdgeMap::new(Vec::new(), h.edge_count())));
    }
    if h.edge_count() == 0 {
        return Ok(None);
    }
    let order = match opts.edge_order {
        EdgeOrder::Dfs => dfs_edge_order(g),
        EdgeOrder::Index => (0..g.edge_count()).collect(),
        EdgeOrder::Constrained => constrained_edge_order(g),
    };
    let full = if h.vertex_count() == 128 { u128::MAX } else { (1u128 << h.vertex_count()) - 1 };
    let first_values = if opts.symmetry_breaking { Some(edge_orbit_representatives(h)) } else { None };
    let mut s = Search {
        g,
        h,
        shortcut: opts.triangle_free_shortcut && h.is_triangle_free(),
        ends: (0..h.edge_count())
            .map(|e| {
                let (p, q) = h.endpoints(e);
                (1u128 << p) | (1u128 << q)
            })
            .collect(),
        order,
        assign: vec![UNSET; g.edge_count()],
        cand: vec![full; g.vertex_count()],
        trail: Vec::new(),
        nodes: 0,
        budget: opts.node_budget,
        rng: opts.seed.map(StdRng::seed_from_u64),
        first_values,
    };
    if !s.run(0)? {
        return Ok(None);
    }
    let f = EdgeMap::new(s.assign, h.edge_count());
    verify_hcoloring(g, h, &f).map_err(|e| Error::VerificationFailed(format!("solver produced a bad map: {e}")))?;
    Ok(Some(f))
}

struct Search<'a> {
    g: &'a MultiGraph,
    h: &'a MultiGraph,
    shortcut: bool,
    /// endpoint mask of each target edge
    ends: Vec<u128>,
    order: Vec<usize>,
    assign: Vec<usize>,
    /// target vertices each source star may still map onto
    cand: Vec<u128>,
    trail: Vec<(usize, u128)>,
    nodes: u64,
    budget: Option<u64>,
    rng: Option<StdRng>,
    first_values: Option<Vec<usize>>,
}

impl Search<'_> {
    /// Could source edge `e` take target edge `t` given the current state?
    fn viable(&self, e: usize, t: usize) -> bool {
        let (a, b) = self.g.endpoints(e);
        [a, b].into_iter().all(|x| {
            let clash = self.g.star(x).iter().any(|&f| {
                let img = self.assign[f];
                f != e && img != UNSET && (img == t || (self.shortcut && !self.h.are_adjacent_edges(img, t)))
            });
            !clash && (self.shortcut || self.cand[x] & self.ends[t] != 0)
        })
    }

    /// Target edges worth trying for `e`, ascending.
    fn values(&self, e: usize) -> Vec<usize> {
        let (a, _) = self.g.endpoints(e);
        let mut out: Vec<usize> = if self.shortcut {
            let anchor = self.g.star(a).iter().map(|&f| self.assign[f]).find(|&img| img != UNSET);
            match anchor {
                Some(img) => {
                    let (p, q) = self.h.endpoints(img);
                    self.h.star(p).iter().chain(self.h.star(q)).copied().collect()
                }
                None => (0..self.h.edge_count()).collect(),
            }
        } else {
            let mut c = self.cand[a];
            let mut v = Vec::new();
            while c != 0 {
                let y = c.trailing_zeros() as usize;
                c &= c - 1;
                v.extend_from_slice(self.h.star(y));
            }
            v
        };
        out.sort_unstable();
        out.dedup();
        out.retain(|&t| self.viable(e, t));
        out
    }

    fn set(&mut self, e: usize, t: usize) {
        self.assign[e] = t;
        if !self.shortcut {
            let (a, b) = self.g.endpoints(e);
            for x in [a, b] {
                self.trail.push((x, self.cand[x]));
                self.cand[x] &= self.ends[t];
            }
        }
    }

    fn unset(&mut self, e: usize, mark: usize) {
        self.assign[e] = UNSET;
        while self.trail.len() > mark {
            let (x, old) = self.trail.pop().expect("trail entry");
            self.cand[x] = old;
        }
    }

    /// Every unassigned edge next to `e` still has a value.
    fn neighbours_ok(&self, e: usize) -> bool {
        let (a, b) = self.g.endpoints(e);
        self.g
            .star(a)
            .iter()
            .chain(self.g.star(b))
            .all(|&f| self.assign[f] != UNSET || !self.values(f).is_empty())
    }

    fn run(&mut self, i: usize) -> Result<bool> {
        if i == self.order.len() {
            return Ok(true);
        }
        let e = self.order[i];
        let mut values = self.values(e);
        if i == 0 {
            if let Some(reps) = &self.first_values {
                values.retain(|t| reps.contains(t));
            }
        }
        if let Some(rng) = &mut self.rng {
            values.shuffle(rng);
        }
        for t in values {
            self.nodes += 1;
            if let Some(b) = self.budget {
                if self.nodes > b {
                    return Err(Error::BudgetExceeded(b));
                }
            }
            let mark = self.trail.len();
            self.set(e, t);
            if self.neighbours_ok(e) && self.run(i + 1)? {
                return Ok(true);
            }
            self.unset(e, mark);
        }
        Ok(false)
    }
}
