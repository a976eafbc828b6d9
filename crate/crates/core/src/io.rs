//! File formats: DIMACS edge lists, Kneser graph JSON and certificate JSON.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::certificate::{Certificate, Provenance};
use crate::error::{Error, Result};
use crate::graph::{GenericGraph, KneserGraph};
use crate::subset::KSubset;

/// DIMACS edge format: `p edge N M` then one `e u v` line per edge with
/// 1-based indices, `u < v`, in canonical order.
pub fn write_dimacs(g: &GenericGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.order(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn parse_dimacs(text: &str) -> Result<GenericGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        match fields.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(Error::Parse(format!("line {lineno}: duplicate problem line")));
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(Error::Parse(format!("line {lineno}: expected `p edge N M`")));
                }
                header = Some((parse_num(fields[2], lineno)?, parse_num(fields[3], lineno)?));
            }
            Some("e") => {
                let Some((order, _)) = header else {
                    return Err(Error::Parse(format!("line {lineno}: edge before problem line")));
                };
                if fields.len() != 3 {
                    return Err(Error::Parse(format!("line {lineno}: expected `e u v`")));
                }
                let u = parse_num(fields[1], lineno)?;
                let v = parse_num(fields[2], lineno)?;
                if u == 0 || v == 0 || u > order || v > order {
                    return Err(Error::Parse(format!("line {lineno}: vertex out of range 1..={order}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(Error::Parse(format!("line {lineno}: unknown record `{other}`")));
            }
        }
    }
    let (order, declared) = header.ok_or_else(|| Error::Parse("missing problem line".into()))?;
    if declared != edges.len() {
        return Err(Error::Parse(format!("header declares {declared} edges, found {}", edges.len())));
    }
    GenericGraph::from_edges(order, &edges).map_err(|e| Error::Parse(e.to_string()))
}

fn parse_num(s: &str, lineno: usize) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse(format!("line {lineno}: `{s}` is not a number")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KneserJson {
    pub n: u32,
    pub k: u32,
    pub vertices: Vec<Vec<u32>>,
}

impl KneserJson {
    pub fn from_graph(g: &KneserGraph) -> Self {
        Self { n: g.n(), k: g.k(), vertices: g.vertices().iter().map(|v| v.to_vec()).collect() }
    }

    /// Rebuilds the graph, rejecting vertex lists that are not the canonical
    /// enumeration of `K(n,k)`.
    pub fn to_graph(&self, vertex_cap: u64) -> Result<KneserGraph> {
        let g = KneserGraph::build_with_cap(self.n, self.k, vertex_cap)?;
        if self.vertices.len() != g.order() {
            return Err(Error::Parse(format!("expected {} vertices, found {}", g.order(), self.vertices.len())));
        }
        for (i, elems) in self.vertices.iter().enumerate() {
            let s = KSubset::from_elements(elems, self.n)?;
            if s != g.vertex(i) {
                return Err(Error::Parse(format!("vertex {} is {s}, canonical order has {}", i + 1, g.vertex(i))));
            }
        }
        Ok(g)
    }
}

pub fn kneser_to_json(g: &KneserGraph) -> String {
    serde_json::to_string(&KneserJson::from_graph(g)).expect("serializable")
}

pub fn kneser_from_json(text: &str, vertex_cap: u64) -> Result<KneserGraph> {
    let parsed: KneserJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    parsed.to_graph(vertex_cap)
}

/// Certificate wire format; `set` lists each vertex as its sorted elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub n: u32,
    pub k: u32,
    pub d: usize,
    pub set: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
}

impl CertificateJson {
    pub fn from_certificate(cert: &Certificate, g: &KneserGraph, valid: Option<bool>) -> Self {
        Self {
            n: cert.n,
            k: cert.k,
            d: cert.d,
            set: cert.indices.iter().map(|&i| g.vertex(i).to_vec()).collect(),
            valid,
        }
    }

    /// Resolves each listed `k`-subset to its canonical index in `K(n,k)`.
    pub fn resolve(&self, g: &KneserGraph) -> Result<Certificate> {
        if self.n != g.n() || self.k != g.k() {
            return Err(Error::Contract(format!(
                "certificate is for K({},{}), graph is K({},{})",
                self.n,
                self.k,
                g.n(),
                g.k()
            )));
        }
        let mut indices = Vec::with_capacity(self.set.len());
        for elems in &self.set {
            let s = KSubset::from_elements(elems, self.n)?;
            let idx = g
                .index_of(&s)
                .ok_or_else(|| Error::Parse(format!("{s} is not a vertex of K({},{})", self.n, self.k)))?;
            indices.push(idx);
        }
        Ok(Certificate::new(self.n, self.k, self.d, indices, Provenance::User))
    }
}

pub fn parse_certificate(text: &str) -> Result<CertificateJson> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}
