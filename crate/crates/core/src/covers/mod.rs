//! Matchings, edge colorings and the cover structures built from them.

mod even;
mod labels;
mod matching;
mod reduce;
mod triangle;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, MultiGraph};

pub use even::{cycle_space_basis, cycle_space_dimension, even_subgraphs};
pub use matching::{
    enumerate_matchings, enumerate_perfect_matchings, find_berge_fulkerson, first_perfect_matching, pm_cover_number,
};
pub use reduce::{digon_reduction, diamond_string_reduction, CoverLift, Reduction};
pub use triangle::{descend_even_cover_through_triangle, lift_join_cover_to_triangle_expansion, JoinLift};

pub use labels::{chromatic_index_cubic, find_even_cover_5_2, find_parity_cover_4, ChromaticIndex};

/// No edge is used twice at a vertex and no loop is used.
pub fn is_matching(g: &MultiGraph, s: &EdgeSubset) -> bool {
    (0..g.vertex_count()).all(|v| s.degree_in(g, v) <= 1)
}

pub fn is_perfect_matching(g: &MultiGraph, s: &EdgeSubset) -> bool {
    (0..g.vertex_count()).all(|v| s.degree_in(g, v) == 1)
}

/// Every vertex has even degree in `s`.
pub fn is_even(g: &MultiGraph, s: &EdgeSubset) -> bool {
    (0..g.vertex_count()).all(|v| s.degree_in(g, v).is_multiple_of(2))
}

/// The complement of `s` is even; for cubic graphs every vertex has odd
/// degree in `s`.
pub fn is_parity(g: &MultiGraph, s: &EdgeSubset) -> bool {
    (0..g.vertex_count()).all(|v| s.degree_in(g, v) % 2 == 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverKind {
    PmCover,
    BergeFulkerson,
    Even52,
    Parity4,
}

impl CoverKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CoverKind::PmCover => "pm-cover",
            CoverKind::BergeFulkerson => "berge-fulkerson",
            CoverKind::Even52 => "even52",
            CoverKind::Parity4 => "parity4",
        }
    }
}

/// An ordered list of edge subsets with a declared multiplicity contract.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverList {
    pub kind: CoverKind,
    pub parts: Vec<EdgeSubset>,
}

impl CoverList {
    pub fn new(kind: CoverKind, parts: Vec<EdgeSubset>) -> Self {
        CoverList { kind, parts }
    }

    /// How many parts contain each edge.
    pub fn multiplicities(&self, edge_count: usize) -> Vec<usize> {
        let mut count = vec![0; edge_count];
        for p in &self.parts {
            for e in p.iter() {
                count[e] += 1;
            }
        }
        count
    }

    /// Checks every invariant of the declared kind.
    pub fn verify(&self, g: &MultiGraph) -> Result<()> {
        for p in &self.parts {
            p.check_owner(g)?;
        }
        let (parts, part_ok, lo, hi): (Option<usize>, fn(&MultiGraph, &EdgeSubset) -> bool, usize, usize) =
            match self.kind {
                CoverKind::PmCover => (None, is_perfect_matching, 1, usize::MAX),
                CoverKind::BergeFulkerson => (Some(6), is_perfect_matching, 2, 2),
                CoverKind::Even52 => (Some(5), is_even, 2, 2),
                CoverKind::Parity4 => (Some(4), is_parity, 1, 2),
            };
        let kind = self.kind.as_str();
        if let Some(n) = parts {
            if self.parts.len() != n {
                return Err(Error::InvalidCover(format!("{kind} needs {n} parts, got {}", self.parts.len())));
            }
        }
        if let Some(i) = self.parts.iter().position(|p| !part_ok(g, p)) {
            return Err(Error::InvalidCover(format!("{kind} part {i} has the wrong degrees")));
        }
        let count = self.multiplicities(g.edge_count());
        if let Some(e) = count.iter().position(|&c| c < lo || c > hi) {
            return Err(Error::InvalidCover(format!("{kind}: edge {e} lies in {} parts", count[e])));
        }
        Ok(())
    }
}

/// Existence answers of the two searches, with witnesses.
#[derive(Clone, Debug)]
pub struct CoverEquivalence {
    pub even: Option<CoverList>,
    pub parity: Option<CoverList>,
}

/// Runs both the (5,2)-even cover search and the 4-join cover search and
/// checks that they agree on existence.
pub fn cq_equivalence_check(g: &MultiGraph) -> Result<CoverEquivalence> {
    let even = find_even_cover_5_2(g);
    let parity = find_parity_cover_4(g);
    if even.is_some() != parity.is_some() {
        return Err(Error::EquivalenceViolation(format!(
            "even cover {}, join cover {}",
            if even.is_some() { "found" } else { "absent" },
            if parity.is_some() { "found" } else { "absent" }
        )));
    }
    Ok(CoverEquivalence { even, parity })
}

/// A proper edge coloring with colors `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub k: usize,
    pub colors: Vec<usize>,
}

impl EdgeColoring {
    /// First vertex where two edges share a color, or a loop is present.
    pub fn check_proper(&self, g: &MultiGraph) -> Result<()> {
        if self.colors.len() != g.edge_count() {
            return Err(Error::PartialMap(format!(
                "{} colors for {} edges",
                self.colors.len(),
                g.edge_count()
            )));
        }
        for v in 0..g.vertex_count() {
            let star = g.star(v);
            if star.len() < 3 {
                return Err(Error::NotProper(v));
            }
            for (i, &e) in star.iter().enumerate() {
                if self.colors[e] >= self.k || star[i + 1..].iter().any(|&f| self.colors[f] == self.colors[e]) {
                    return Err(Error::NotProper(v));
                }
            }
        }
        Ok(())
    }

    /// Edges of each color.
    pub fn classes(&self, edge_count: usize) -> Vec<EdgeSubset> {
        (0..self.k)
            .map(|c| EdgeSubset::from_indices(edge_count, (0..edge_count).filter(|&e| self.colors[e] == c)))
            .collect()
    }
}
