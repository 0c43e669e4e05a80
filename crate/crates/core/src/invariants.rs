//! Properties every H-coloring must transport from `H` back to `G`, checked
//! on a concrete map.

use serde::Serialize;

use crate::covers::{
    chromatic_index_cubic, enumerate_matchings, enumerate_perfect_matchings, even_subgraphs, find_berge_fulkerson,
    is_even, is_matching, is_perfect_matching, pm_cover_number, CoverKind, CoverList,
};
use crate::error::Result;
use crate::graph::MultiGraph;
use crate::hcoloring::{preimage, verify_hcoloring, EdgeMap};
use crate::normal::{induced_normal_coloring, normal_chromatic_index};

/// Enumeration caps; anything larger is skipped and reported as such.
#[derive(Clone, Debug)]
pub struct SuiteLimits {
    pub max_matchings: usize,
    pub max_cycle_dimension: usize,
    /// edges of `h` up to which normal colorings and covers are searched
    pub max_search_edges: usize,
}

impl Default for SuiteLimits {
    fn default() -> Self {
        SuiteLimits { max_matchings: 200_000, max_cycle_dimension: 20, max_search_edges: 30 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "lowercase")]
pub enum CheckStatus {
    Passed,
    Skipped(String),
    Failed(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    #[serde(flatten)]
    pub status: CheckStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !matches!(c.status, CheckStatus::Failed(_)))
    }

    pub fn status(&self, name: &str) -> Option<&CheckStatus> {
        self.checks.iter().find(|c| c.name == name).map(|c| &c.status)
    }
}

fn outcome(name: &'static str, status: CheckStatus) -> CheckOutcome {
    CheckOutcome { name, status }
}

fn all_or_first<T>(items: impl IntoIterator<Item = T>, ok: impl Fn(&T) -> bool, what: &str) -> CheckStatus {
    for (i, x) in items.into_iter().enumerate() {
        if !ok(&x) {
            return CheckStatus::Failed(format!("{what} #{i}"));
        }
    }
    CheckStatus::Passed
}

/// Runs every pullback check on a verified coloring `f` of `g` by `h`.
pub fn pullback_suite(g: &MultiGraph, h: &MultiGraph, f: &EdgeMap, limits: &SuiteLimits) -> Result<SuiteReport> {
    verify_hcoloring(g, h, f)?;
    let mut checks = Vec::new();
    let small = h.edge_count() <= limits.max_search_edges;

    checks.push(outcome(
        "matching-preimage",
        match enumerate_matchings(h, limits.max_matchings) {
            Some(ms) => all_or_first(ms, |m| is_matching(g, &preimage(f, m)), "preimage of matching"),
            None => CheckStatus::Skipped(format!("more than {} matchings", limits.max_matchings)),
        },
    ));

    let pms = enumerate_perfect_matchings(h);
    checks.push(outcome(
        "perfect-matching-preimage",
        all_or_first(pms.iter(), |m| is_perfect_matching(g, &preimage(f, m)), "preimage of perfect matching"),
    ));

    checks.push(outcome(
        "even-preimage",
        match even_subgraphs(h, limits.max_cycle_dimension) {
            Some(evens) => all_or_first(evens, |s| is_even(g, &preimage(f, s)), "preimage of even subgraph"),
            None => CheckStatus::Skipped(format!("cycle space has more than {} dimensions", limits.max_cycle_dimension)),
        },
    ));

    let h_bridges = h.bridges();
    checks.push(outcome(
        "bridge-image",
        all_or_first(g.bridges().iter(), |&e| h_bridges.contains(f.get(e)), "bridge"),
    ));

    let pull = |c: &CoverList| CoverList::new(c.kind, c.parts.iter().map(|p| preimage(f, p)).collect());
    checks.push(outcome(
        "berge-fulkerson-pullback",
        match find_berge_fulkerson(h) {
            Some(bf) => match pull(&bf).verify(g) {
                Ok(()) => CheckStatus::Passed,
                Err(e) => CheckStatus::Failed(e.to_string()),
            },
            None => CheckStatus::Skipped("target has no Berge-Fulkerson cover".into()),
        },
    ));

    checks.push(outcome(
        "cover-number-pullback",
        if !small {
            CheckStatus::Skipped("target too large".into())
        } else {
            match pm_cover_number(h, 6) {
                Some(c) => match pull(&c).verify(g) {
                    Ok(()) if c.kind == CoverKind::PmCover => CheckStatus::Passed,
                    Ok(()) => CheckStatus::Failed("unexpected cover kind".into()),
                    Err(e) => CheckStatus::Failed(e.to_string()),
                },
                None => CheckStatus::Skipped("target has no perfect-matching cover".into()),
            }
        },
    ));

    checks.push(outcome(
        "edge-coloring-pullback",
        match chromatic_index_cubic(h).coloring {
            Some(c) => {
                let colors = f.assignment.iter().map(|&t| c.colors[t]).collect();
                match (crate::covers::EdgeColoring { k: 3, colors }).check_proper(g) {
                    Ok(()) => CheckStatus::Passed,
                    Err(e) => CheckStatus::Failed(e.to_string()),
                }
            }
            None => CheckStatus::Skipped("target is not 3-edge-colorable".into()),
        },
    ));

    checks.push(outcome(
        "normal-pullback",
        if !small {
            CheckStatus::Skipped("target too large".into())
        } else {
            match normal_chromatic_index(h) {
                Some(c) => match induced_normal_coloring(g, h, f, &c) {
                    Ok(_) => CheckStatus::Passed,
                    Err(e) => CheckStatus::Failed(e.to_string()),
                },
                None => CheckStatus::Skipped("target has no normal coloring".into()),
            }
        },
    ));

    Ok(SuiteReport { checks })
}
