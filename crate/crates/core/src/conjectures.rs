//! Derivation pipelines between coloring conjectures, class membership and
//! corpus scans.
//!
//! Scans never treat a budget overrun as a refutation. Pipelines verify every
//! map they return.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{get, p12_triangle, s12, s12_central_triangle, Named};
use crate::covers::{
    chromatic_index_cubic, first_perfect_matching, pm_cover_number, CoverKind, CoverList,
};
use crate::error::{Error, Result};
use crate::graph::{Expansion, MultiGraph};
use crate::hcoloring::{compose, contraction_coloring, solve_hcoloring, verify_hcoloring, EdgeMap, SolverOptions};
use crate::io::emit_mg;
use crate::iso::is_isomorphic;
use crate::normal::{solve_normal, MAX_NORMAL_COLORS};

/// Upward-closed classes of connected cubic graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClass {
    All,
    Bridgeless,
    ThreeEdgeColorable,
    PerfectMatching,
    /// coverable by at most four perfect matchings
    Cover4,
    /// admits a normal k-edge-coloring, 3 ≤ k ≤ 7
    Normal(usize),
}

impl GraphClass {
    pub fn all() -> Vec<GraphClass> {
        let mut v = vec![
            GraphClass::All,
            GraphClass::Bridgeless,
            GraphClass::ThreeEdgeColorable,
            GraphClass::PerfectMatching,
            GraphClass::Cover4,
        ];
        v.extend((3..=MAX_NORMAL_COLORS).map(GraphClass::Normal));
        v
    }
}

/// Evidence for a membership answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "kebab-case")]
pub enum Witness {
    /// an edge map into the target, indexed by source edge
    EdgeMap(Vec<usize>),
    /// a proper edge coloring
    Coloring(Vec<usize>),
    /// a list of edge sets
    Cover { kind: CoverKind, parts: Vec<Vec<usize>> },
    /// a set of edges, e.g. a perfect matching or the bridges
    Edges(Vec<usize>),
}

impl From<&CoverList> for Witness {
    fn from(c: &CoverList) -> Self {
        Witness::Cover { kind: c.kind, parts: c.parts.iter().map(|p| p.to_vec()).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub witness: Option<Witness>,
}

/// Decides membership of a connected graph in a class.
pub fn class_membership(g: &MultiGraph, class: GraphClass) -> Result<Membership> {
    if !g.is_connected() {
        return Err(Error::PreconditionViolated("class membership is defined for connected graphs".into()));
    }
    let m = match class {
        GraphClass::All => Membership { member: true, witness: None },
        GraphClass::Bridgeless => {
            let b = g.bridges();
            Membership { member: b.is_empty(), witness: (!b.is_empty()).then(|| Witness::Edges(b.to_vec())) }
        }
        GraphClass::ThreeEdgeColorable => {
            let chi = chromatic_index_cubic(g);
            let member = chi.index == 3;
            Membership { member, witness: chi.coloring.filter(|_| member).map(|c| Witness::Coloring(c.colors)) }
        }
        GraphClass::PerfectMatching => {
            let pm = first_perfect_matching(g);
            Membership { member: pm.is_some(), witness: pm.map(|p| Witness::Edges(p.to_vec())) }
        }
        GraphClass::Cover4 => {
            let c = pm_cover_number(g, 4);
            Membership { member: c.is_some(), witness: c.as_ref().map(Witness::from) }
        }
        GraphClass::Normal(k) => {
            if !(3..=MAX_NORMAL_COLORS).contains(&k) {
                return Err(Error::PreconditionViolated(format!("normal class needs 3 <= k <= 7, got {k}")));
            }
            let c = solve_normal(g, k);
            Membership { member: c.is_some(), witness: c.map(|c| Witness::Coloring(c.coloring.colors)) }
        }
    };
    Ok(m)
}

/// The smallest vertex set whose triangle expansion has a perfect matching,
/// searched by size and then lexicographically.
pub fn minimal_expansion_set(g: &MultiGraph) -> Result<Vec<usize>> {
    if g.has_loops() {
        return Err(Error::PreconditionViolated("vertices with loops cannot be expanded".into()));
    }
    if first_perfect_matching(g).is_some() {
        return Err(Error::HasPerfectMatching);
    }
    let n = g.vertex_count();
    for k in 1..=n {
        let mut set: Vec<usize> = (0..k).collect();
        loop {
            if first_perfect_matching(&g.expand_vertices_to_triangles(&set)?.graph).is_some() {
                return Ok(set);
            }
            // next k-subset in lexicographic order
            let Some(i) = (0..k).rev().find(|&i| set[i] < n - k + i) else { break };
            set[i] += 1;
            for j in (i + 1)..k {
                set[j] = set[j - 1] + 1;
            }
        }
    }
    Err(Error::ProofAssertionFailed("the full triangle expansion has no perfect matching".into()))
}

/// Which branch of a derivation produced the map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// the graph was colored directly and the map composed
    Direct,
    /// the listed vertices were expanded first
    Expanded(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub map: EdgeMap,
    pub route: Route,
}

/// Oracle returning S12-colorings; the solver by default.
pub type S12Oracle<'a> = dyn FnMut(&MultiGraph) -> Result<Option<EdgeMap>> + 'a;

/// An S12 oracle backed by the exact solver.
pub fn solver_oracle(opts: SolverOptions) -> impl FnMut(&MultiGraph) -> Result<Option<EdgeMap>> {
    move |g| solve_hcoloring(g, &get(Named::S12), &opts)
}

fn call_oracle(oracle: &mut S12Oracle<'_>, g: &MultiGraph, s12g: &MultiGraph) -> Result<EdgeMap> {
    let f = oracle(g)?.ok_or_else(|| Error::OracleFailed("no S12-coloring returned".into()))?;
    verify_hcoloring(g, s12g, &f).map_err(|e| Error::OracleFailed(format!("oracle map rejected: {e}")))?;
    Ok(f)
}

/// Checks that every expanded triangle maps onto the central triangle of S12.
pub fn check_central_triangles(x: &Expansion, f: &EdgeMap) -> Result<()> {
    let mut central = s12::CENTRAL;
    central.sort_unstable();
    for t in &x.triangles {
        let mut images = t.triangle_edges.map(|e| f.get(e));
        images.sort_unstable();
        if images != central {
            return Err(Error::ProofAssertionFailed(format!(
                "triangle of vertex {} maps to {images:?}, not onto the central triangle",
                t.original
            )));
        }
    }
    Ok(())
}

/// Builds an S10-coloring of `g` from S12-colorings supplied by `oracle`.
pub fn derive_s10_from_s12(g: &MultiGraph, oracle: &mut S12Oracle<'_>) -> Result<Derivation> {
    if g.has_loops() {
        return Err(Error::PreconditionViolated("graph has loops".into()));
    }
    let s12g = get(Named::S12);
    let s10 = get(Named::S10);
    let (_, rho) = contraction_coloring(&s12g, &s12_central_triangle())?;

    if first_perfect_matching(g).is_some() {
        let f = call_oracle(oracle, g, &s12g)?;
        let map = compose(&f, &rho)?;
        verify_hcoloring(g, &s10, &map).map_err(|e| Error::ProofAssertionFailed(format!("composed map: {e}")))?;
        return Ok(Derivation { map, route: Route::Direct });
    }

    let u = minimal_expansion_set(g)?;
    let x = g.expand_vertices_to_triangles(&u)?;
    let f = call_oracle(oracle, &x.graph, &s12g)?;
    check_central_triangles(&x, &f)?;
    // edges of g keep their index in the expansion
    let assignment = (0..g.edge_count()).map(|e| rho.get(f.get(e))).collect();
    let map = EdgeMap::new(assignment, s10.edge_count());
    verify_hcoloring(g, &s10, &map).map_err(|e| Error::ProofAssertionFailed(format!("recolored map: {e}")))?;
    Ok(Derivation { map, route: Route::Expanded(u) })
}

/// Builds a P10-coloring of a bridgeless graph through P12-colorings.
/// `Ok(None)` means a search step finished without a witness.
pub fn derive_p10_via_p12(g: &MultiGraph, opts: &SolverOptions) -> Result<Option<Derivation>> {
    if !g.is_connected() || !g.is_bridgeless() || g.has_loops() {
        return Err(Error::PreconditionViolated("graph must be connected, bridgeless and loopless".into()));
    }
    let p12 = get(Named::P12);
    let p10 = get(Named::P10);
    let (_, pi) = contraction_coloring(&p12, &p12_triangle())?;

    if pm_cover_number(g, 4).is_some() {
        let Some(f) = solve_hcoloring(g, &p12, opts)? else { return Ok(None) };
        let map = compose(&f, &pi)?;
        verify_hcoloring(g, &p10, &map).map_err(|e| Error::ProofAssertionFailed(format!("composed map: {e}")))?;
        return Ok(Some(Derivation { map, route: Route::Direct }));
    }

    let x = g.expand_all()?;
    if pm_cover_number(&x.graph, 4).is_none() {
        return Ok(None);
    }
    let Some(f) = solve_hcoloring(&x.graph, &p12, opts)? else { return Ok(None) };
    let fx = compose(&f, &pi)?;
    // P10 is triangle-free, so each triangle maps onto a vertex star and
    // contracting it leaves the inherited edges consistent
    let assignment = (0..g.edge_count()).map(|e| fx.get(e)).collect();
    let map = EdgeMap::new(assignment, p10.edge_count());
    verify_hcoloring(g, &p10, &map).map_err(|e| Error::ProofAssertionFailed(format!("contracted map: {e}")))?;
    Ok(Some(Derivation { map, route: Route::Expanded((0..g.vertex_count()).collect()) }))
}

/// Targets of rigidity scans: graphs `G` with `G ≺ target` under a
/// hypothesis are limited to a fixed list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RigidityTarget {
    /// bridgeless graphs; only P10
    P10,
    /// all graphs; only S10
    S10,
    /// bridgeless graphs; P10 or P12
    P12,
    /// all graphs; S10 or S12
    S12,
    /// simple graphs; only S16
    S16,
    /// simple graphs; only P10
    P10Simple,
}

impl RigidityTarget {
    pub const ALL: [RigidityTarget; 6] = [
        RigidityTarget::P10,
        RigidityTarget::S10,
        RigidityTarget::P12,
        RigidityTarget::S12,
        RigidityTarget::S16,
        RigidityTarget::P10Simple,
    ];

    pub fn graph(self) -> MultiGraph {
        get(match self {
            RigidityTarget::P10 | RigidityTarget::P10Simple => Named::P10,
            RigidityTarget::S10 => Named::S10,
            RigidityTarget::P12 => Named::P12,
            RigidityTarget::S12 => Named::S12,
            RigidityTarget::S16 => Named::S16,
        })
    }

    pub fn allowed(self) -> Vec<Named> {
        match self {
            RigidityTarget::P10 | RigidityTarget::P10Simple => vec![Named::P10],
            RigidityTarget::S10 => vec![Named::S10],
            RigidityTarget::P12 => vec![Named::P10, Named::P12],
            RigidityTarget::S12 => vec![Named::S10, Named::S12],
            RigidityTarget::S16 => vec![Named::S16],
        }
    }

    /// `None` if the hypothesis holds, else the reason for skipping.
    fn hypothesis(self, g: &MultiGraph) -> Option<String> {
        if !g.is_connected() || g.has_loops() {
            return Some("not a connected loopless graph".into());
        }
        match self {
            RigidityTarget::P10 | RigidityTarget::P12 if !g.is_bridgeless() => Some("has a bridge".into()),
            RigidityTarget::S16 | RigidityTarget::P10Simple if !g.is_simple() => Some("not simple".into()),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RigidityTarget::P10 => "P10",
            RigidityTarget::S10 => "S10",
            RigidityTarget::P12 => "P12",
            RigidityTarget::S12 => "S12",
            RigidityTarget::S16 => "S16",
            RigidityTarget::P10Simple => "P10-simple",
        }
    }
}

/// Conjectured properties checked by [`conjecture_scan`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Conjecture {
    /// bridgeless graphs admit a P10-coloring
    P10,
    /// all graphs admit an S10-coloring
    S10,
    /// graphs with a perfect matching admit an S12-coloring
    S12,
    /// graphs covered by four perfect matchings admit a P12-coloring
    P12,
    /// claw-free bridgeless graphs are covered by four perfect matchings
    ClawFreeBerge,
}

impl Conjecture {
    pub const ALL: [Conjecture; 5] =
        [Conjecture::P10, Conjecture::S10, Conjecture::S12, Conjecture::P12, Conjecture::ClawFreeBerge];

    pub fn as_str(self) -> &'static str {
        match self {
            Conjecture::P10 => "P10conj",
            Conjecture::S10 => "S10conj",
            Conjecture::S12 => "S12conj",
            Conjecture::P12 => "P12conj",
            Conjecture::ClawFreeBerge => "ClawFreeBerge",
        }
    }

    /// The coloring target, if the property is an H-coloring.
    pub fn target(self) -> Option<Named> {
        match self {
            Conjecture::P10 => Some(Named::P10),
            Conjecture::S10 => Some(Named::S10),
            Conjecture::S12 => Some(Named::S12),
            Conjecture::P12 => Some(Named::P12),
            Conjecture::ClawFreeBerge => None,
        }
    }

    fn hypothesis(self, g: &MultiGraph) -> Option<String> {
        if !g.is_connected() || g.has_loops() {
            return Some("not a connected loopless graph".into());
        }
        match self {
            Conjecture::P10 if !g.is_bridgeless() => Some("has a bridge".into()),
            Conjecture::S10 | Conjecture::P10 => None,
            Conjecture::S12 => first_perfect_matching(g).is_none().then(|| "no perfect matching".into()),
            Conjecture::P12 => {
                if pm_cover_number(g, 4).is_some() {
                    None
                } else if pm_cover_number(g, g.edge_count()).is_none() {
                    Some("k(G) undefined: some edge lies in no perfect matching".into())
                } else {
                    Some("k(G) > 4".into())
                }
            }
            Conjecture::ClawFreeBerge => {
                if !g.is_bridgeless() {
                    Some("has a bridge".into())
                } else if !g.is_claw_free() {
                    Some("not claw-free".into())
                } else {
                    None
                }
            }
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let k = s.to_ascii_lowercase();
        Conjecture::ALL
            .into_iter()
            .find(|c| c.as_str().to_ascii_lowercase() == k || c.as_str().trim_end_matches("conj").to_ascii_lowercase() == k)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

impl fmt::Display for RigidityTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RigidityTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RigidityTarget::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    /// the searched relation or property holds; a witness is attached
    Positive,
    /// exhaustive search found no witness
    Negative,
    Skipped,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEntry {
    /// position in the corpus
    pub index: usize,
    /// the graph in `.mg` form
    pub graph: String,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    /// counts toward `counterexamples`
    pub violation: bool,
    pub micros: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    /// `rigidity` or `conjecture`
    pub mode: String,
    pub subject: String,
    pub corpus_size: usize,
    pub offset: usize,
    pub entries: Vec<ScanEntry>,
    /// corpus indices of positives
    pub positives: Vec<usize>,
    pub counterexamples: Vec<usize>,
    pub budget_exhausted: Vec<usize>,
    pub skipped: Vec<usize>,
    /// set when a counterexample stopped the scan early
    pub halted_at: Option<usize>,
    /// index to resume from
    pub next_offset: usize,
    pub elapsed_ms: u64,
    pub max_entry_micros: u64,
}

impl ScanReport {
    fn assemble(mode: &str, subject: String, corpus_size: usize, offset: usize, entries: Vec<ScanEntry>, start: Instant) -> Self {
        let pick = |p: &dyn Fn(&ScanEntry) -> bool| entries.iter().filter(|e| p(e)).map(|e| e.index).collect();
        let halted_at = if mode == "conjecture" { entries.iter().find(|e| e.violation).map(|e| e.index) } else { None };
        ScanReport {
            mode: mode.into(),
            subject,
            corpus_size,
            offset,
            positives: pick(&|e| e.outcome == Outcome::Positive),
            counterexamples: pick(&|e| e.violation),
            budget_exhausted: pick(&|e| e.outcome == Outcome::BudgetExceeded),
            skipped: pick(&|e| e.outcome == Outcome::Skipped),
            halted_at,
            next_offset: entries.last().map_or(offset, |e| e.index + 1),
            max_entry_micros: entries.iter().map(|e| e.micros).max().unwrap_or(0),
            entries,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }

    pub fn entry(&self, index: usize) -> Option<&ScanEntry> {
        self.entries.iter().find(|e| e.index == index)
    }
}

fn timed(index: usize, g: &MultiGraph, run: impl FnOnce() -> Check) -> ScanEntry {
    let t = Instant::now();
    let (outcome, detail, witness, violation) = run();
    ScanEntry {
        index,
        graph: emit_mg(g),
        outcome,
        detail,
        witness,
        violation,
        micros: t.elapsed().as_micros() as u64,
    }
}

fn search_outcome(r: Result<Option<EdgeMap>>) -> (Outcome, Option<String>, Option<Witness>) {
    match r {
        Ok(Some(f)) => (Outcome::Positive, None, Some(Witness::EdgeMap(f.assignment))),
        Ok(None) => (Outcome::Negative, None, None),
        Err(Error::BudgetExceeded(n)) => (Outcome::BudgetExceeded, Some(format!("budget of {n} nodes exceeded")), None),
        Err(e) => (Outcome::Skipped, Some(e.to_string()), None),
    }
}

/// For each corpus graph `G` from `offset` on satisfying the target's
/// hypothesis, decides whether the target admits a `G`-coloring. Positives
/// not isomorphic to an allowed graph are counterexamples.
pub fn rigidity_scan(target: RigidityTarget, corpus: &[MultiGraph], offset: usize, opts: &SolverOptions) -> ScanReport {
    let start = Instant::now();
    let tg = target.graph();
    let allowed: Vec<MultiGraph> = target.allowed().into_iter().map(get).collect();
    let entries: Vec<ScanEntry> = corpus
        .par_iter()
        .enumerate()
        .skip(offset)
        .map(|(i, g)| {
            timed(i, g, || {
                if let Some(reason) = target.hypothesis(g) {
                    return (Outcome::Skipped, Some(reason), None, false);
                }
                let (outcome, detail, witness) = search_outcome(solve_hcoloring(&tg, g, opts));
                let violation = outcome == Outcome::Positive && !allowed.iter().any(|a| is_isomorphic(a, g));
                (outcome, detail, witness, violation)
            })
        })
        .collect();
    ScanReport::assemble("rigidity", target.to_string(), corpus.len(), offset, entries, start)
}

fn check_conjecture(c: Conjecture, g: &MultiGraph, opts: &SolverOptions) -> Check {
    if let Some(reason) = c.hypothesis(g) {
        return (Outcome::Skipped, Some(reason), None, false);
    }
    let (outcome, detail, witness) = match c.target() {
        Some(t) => search_outcome(solve_hcoloring(g, &get(t), opts)),
        None => match pm_cover_number(g, 4) {
            Some(cover) => (Outcome::Positive, None, Some(Witness::from(&cover))),
            None => (Outcome::Negative, None, None),
        },
    };
    let violation = outcome == Outcome::Negative;
    (outcome, detail, witness, violation)
}

/// Number of graphs checked in parallel between checks for a refutation.
const CONJECTURE_CHUNK: usize = 64;

/// Checks a conjectured property on every corpus graph from `offset` on.
/// Stops after the first refutation; `next_offset` resumes the scan.
pub fn conjecture_scan(c: Conjecture, corpus: &[MultiGraph], offset: usize, opts: &SolverOptions) -> ScanReport {
    let start = Instant::now();
    let entries = halting_scan(corpus, offset, |_, g| check_conjecture(c, g, opts));
    ScanReport::assemble("conjecture", c.to_string(), corpus.len(), offset, entries, start)
}

type Check = (Outcome, Option<String>, Option<Witness>, bool);

/// Runs `check` in parallel chunks and drops everything after the first
/// violation.
fn halting_scan(corpus: &[MultiGraph], offset: usize, check: impl Fn(usize, &MultiGraph) -> Check + Sync) -> Vec<ScanEntry> {
    let mut entries = Vec::new();
    let mut from = offset.min(corpus.len());
    while from < corpus.len() {
        let to = (from + CONJECTURE_CHUNK).min(corpus.len());
        let chunk: Vec<ScanEntry> =
            (from..to).into_par_iter().map(|i| timed(i, &corpus[i], || check(i, &corpus[i]))).collect();
        if let Some(p) = chunk.iter().position(|e| e.violation) {
            entries.extend(chunk.into_iter().take(p + 1));
            break;
        }
        entries.extend(chunk);
        from = to;
    }
    entries
}
