//! Self-contained JSON certificates and their independent re-verification.
//!
//! A certificate embeds the source graph as `.mg` text, names or embeds the
//! target, and carries the witness. Edge maps and covers index into the edge
//! order of the embedded `.mg` text. Keys are written in sorted order, so
//! identical inputs give byte-identical files.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::catalog::{catalog, get};
use crate::conjectures::{Conjecture, RigidityTarget, ScanEntry, ScanReport, Witness};
use crate::covers::{CoverKind, CoverList, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, MultiGraph};
use crate::hcoloring::{unused_edges, verify_hcoloring, EdgeMap};
use crate::io::{emit_mg, parse_mg};
use crate::normal::NormalColoring;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = concat!("hcolor ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    Hcoloring,
    Cover,
    Normal,
    PipelineTrace,
}

/// The codomain of an edge map: a catalog name or inline `.mg` text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TargetSpec {
    Name(String),
    Inline(String),
}

impl TargetSpec {
    pub fn graph(&self) -> Result<MultiGraph> {
        match self {
            TargetSpec::Name(n) => catalog(n),
            TargetSpec::Inline(text) => parse_mg(text),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Payload {
    EdgeMap {
        map: Vec<usize>,
    },
    Cover {
        cover_kind: CoverKind,
        parts: Vec<Vec<usize>>,
    },
    Normal {
        k: usize,
        colors: Vec<usize>,
    },
    /// A map produced by a multi-step construction. `unused_edges`, when
    /// present, must equal the target edges with empty preimage.
    Trace {
        steps: Vec<String>,
        map: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        unused_edges: Option<Vec<usize>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub kind: CertificateKind,
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<TargetSpec>,
    pub payload: Payload,
    #[serde(default)]
    pub options: Value,
    pub tool_version: String,
}

impl Certificate {
    fn build(kind: CertificateKind, g: &MultiGraph, target: Option<TargetSpec>, payload: Payload, options: Value) -> Self {
        Certificate {
            schema_version: SCHEMA_VERSION,
            kind,
            source: emit_mg(g),
            target,
            payload,
            options,
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    pub fn hcoloring(g: &MultiGraph, target: TargetSpec, f: &EdgeMap, options: Value) -> Self {
        Self::build(CertificateKind::Hcoloring, g, Some(target), Payload::EdgeMap { map: f.assignment.clone() }, options)
    }

    pub fn cover(g: &MultiGraph, cover: &CoverList, options: Value) -> Self {
        let parts = cover.parts.iter().map(EdgeSubset::to_vec).collect();
        Self::build(CertificateKind::Cover, g, None, Payload::Cover { cover_kind: cover.kind, parts }, options)
    }

    pub fn normal(g: &MultiGraph, c: &NormalColoring, options: Value) -> Self {
        let payload = Payload::Normal { k: c.k(), colors: c.coloring.colors.clone() };
        Self::build(CertificateKind::Normal, g, None, payload, options)
    }

    pub fn pipeline_trace(
        g: &MultiGraph,
        target: TargetSpec,
        steps: Vec<String>,
        f: &EdgeMap,
        record_unused: bool,
        options: Value,
    ) -> Self {
        let payload = Payload::Trace {
            steps,
            map: f.assignment.clone(),
            unused_edges: record_unused.then(|| unused_edges(f).to_vec()),
        };
        Self::build(CertificateKind::PipelineTrace, g, Some(target), payload, options)
    }

    /// Deterministic pretty JSON with sorted keys.
    pub fn to_json(&self) -> String {
        // serde_json's default map is ordered by key
        let v = serde_json::to_value(self).expect("certificates serialize");
        let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::MalformedInput(format!("certificate JSON: {e}")))?;
        let version = v.get("schema_version").and_then(Value::as_u64).unwrap_or(0) as u32;
        if version != SCHEMA_VERSION {
            return Err(Error::SchemaMismatch(version));
        }
        serde_json::from_value(v).map_err(|e| Error::MalformedInput(format!("certificate fields: {e}")))
    }

    pub fn source_graph(&self) -> Result<MultiGraph> {
        parse_mg(&self.source)
    }

    /// The source graph, target graph and edge map of a map certificate.
    pub fn edge_map(&self) -> Result<(MultiGraph, MultiGraph, EdgeMap)> {
        let map = match &self.payload {
            Payload::EdgeMap { map } | Payload::Trace { map, .. } => map.clone(),
            _ => return Err(Error::MalformedInput("certificate carries no edge map".into())),
        };
        let target = self.target.as_ref().ok_or_else(|| Error::MalformedInput("certificate has no target".into()))?;
        let h = target.graph()?;
        Ok((self.source_graph()?, h.clone(), EdgeMap::new(map, h.edge_count())))
    }

    /// Re-runs the relevant checker using nothing but the certificate.
    pub fn verify(&self) -> Result<Verdict> {
        let failed = |e: Error| Error::VerificationFailed(e.to_string());
        match (&self.kind, &self.payload) {
            (CertificateKind::Hcoloring, Payload::EdgeMap { .. }) | (CertificateKind::PipelineTrace, Payload::Trace { .. }) => {
                let (g, h, f) = self.edge_map()?;
                if f.assignment.iter().any(|&e| e >= h.edge_count()) {
                    return Err(Error::VerificationFailed("map names an edge outside the target".into()));
                }
                verify_hcoloring(&g, &h, &f).map_err(failed)?;
                let unused = unused_edges(&f).to_vec();
                if let Payload::Trace { unused_edges: Some(claimed), .. } = &self.payload {
                    if *claimed != unused {
                        return Err(Error::VerificationFailed(format!(
                            "claimed unused edges {claimed:?}, actual {unused:?}"
                        )));
                    }
                }
                Ok(Verdict {
                    kind: self.kind,
                    summary: format!("valid H-coloring of a {}-vertex graph", g.vertex_count()),
                    unused_edges: Some(unused),
                })
            }
            (CertificateKind::Cover, Payload::Cover { cover_kind, parts }) => {
                let g = self.source_graph()?;
                let m = g.edge_count();
                if let Some(&e) = parts.iter().flatten().find(|&&e| e >= m) {
                    return Err(Error::VerificationFailed(format!("cover names edge {e}, graph has {m}")));
                }
                let cover = CoverList::new(
                    *cover_kind,
                    parts.iter().map(|p| EdgeSubset::from_indices(m, p.iter().copied())).collect(),
                );
                cover.verify(&g).map_err(failed)?;
                Ok(Verdict {
                    kind: self.kind,
                    summary: format!("valid {} with {} parts", cover_kind.as_str(), parts.len()),
                    unused_edges: None,
                })
            }
            (CertificateKind::Normal, Payload::Normal { k, colors }) => {
                let g = self.source_graph()?;
                let c = NormalColoring::from_coloring(&g, EdgeColoring { k: *k, colors: colors.clone() }).map_err(failed)?;
                c.verify(&g).map_err(failed)?;
                Ok(Verdict { kind: self.kind, summary: format!("valid normal {k}-edge-coloring"), unused_edges: None })
            }
            _ => Err(Error::MalformedInput("certificate kind does not match its payload".into())),
        }
    }
}

/// The result of a successful re-verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub kind: CertificateKind,
    pub summary: String,
    /// target edges with empty preimage, for map certificates
    pub unused_edges: Option<Vec<usize>>,
}

pub fn write_certificate(c: &Certificate, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, c.to_json())?;
    Ok(())
}

pub fn read_certificate(path: impl AsRef<Path>) -> Result<Certificate> {
    Certificate::from_json(&fs::read_to_string(path)?)
}

pub fn read_and_verify_certificate(path: impl AsRef<Path>) -> Result<Verdict> {
    read_certificate(path)?.verify()
}

/// The certificate backing a positive scan entry.
pub fn scan_entry_certificate(report: &ScanReport, entry: &ScanEntry) -> Result<Option<Certificate>> {
    let Some(witness) = &entry.witness else { return Ok(None) };
    let g = parse_mg(&entry.graph)?;
    let options = serde_json::json!({ "scan": report.mode, "subject": report.subject, "index": entry.index });
    let cert = match (report.mode.as_str(), witness) {
        ("rigidity", Witness::EdgeMap(map)) => {
            let target: RigidityTarget = report.subject.parse()?;
            let f = EdgeMap::new(map.clone(), g.edge_count());
            Certificate::hcoloring(&target.graph(), TargetSpec::Inline(entry.graph.clone()), &f, options)
        }
        ("conjecture", Witness::EdgeMap(map)) => {
            let c: Conjecture = report.subject.parse()?;
            let name = c.target().ok_or_else(|| Error::MalformedInput("conjecture has no coloring target".into()))?;
            let f = EdgeMap::new(map.clone(), get(name).edge_count());
            Certificate::hcoloring(&g, TargetSpec::Name(name.to_string()), &f, options)
        }
        (_, Witness::Cover { kind, parts }) => {
            let m = g.edge_count();
            let cover =
                CoverList::new(*kind, parts.iter().map(|p| EdgeSubset::from_indices(m, p.iter().copied())).collect());
            Certificate::cover(&g, &cover, options)
        }
        _ => return Err(Error::MalformedInput("scan witness has no certificate form".into())),
    };
    Ok(Some(cert))
}
