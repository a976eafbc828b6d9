//! Simple undirected graphs on adjacency bitsets, and Kneser graphs built on
//! top of them.

use fixedbitset::FixedBitSet;

use crate::bounds::binom;
use crate::certificate::{Certificate, Provenance};
use crate::error::{Error, Result};
use crate::subset::{enumerate_k_subsets_capped, KSubset, DEFAULT_VERTEX_CAP};

/// A set of vertex indices.
pub type VertexSet = FixedBitSet;

/// Simple graph with one adjacency bitset per vertex. Symmetric and
/// irreflexive; immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericGraph {
    adj: Vec<FixedBitSet>,
}

impl GenericGraph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Self { adj: vec![FixedBitSet::with_capacity(order); order] }
    }

    /// Builds a graph from 0-based edge pairs. Repeated edges collapse;
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(order);
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::Domain(format!("edge ({u}, {v}) out of range for order {order}")));
            }
            if u == v {
                return Err(Error::Domain(format!("self-loop at vertex {u}")));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric predicate evaluated on each pair `u < v`.
    pub fn from_fn(order: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(order);
        for u in 0..order {
            for v in u + 1..order {
                if adjacent(u, v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in increasing order of `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, a)| a.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Set containing every vertex.
    pub fn full_set(&self) -> VertexSet {
        let mut s = FixedBitSet::with_capacity(self.order());
        s.insert_range(..);
        s
    }

    /// Subgraph induced by `set`, relabelled `0..|set|` in increasing order of
    /// the original indices.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<InducedSubgraph> {
        if let Some(v) = set.ones().find(|&v| v >= self.order()) {
            return Err(Error::Contract(format!("vertex {v} not in a graph of order {}", self.order())));
        }
        let index_map: Vec<usize> = set.ones().collect();
        let graph = Self::from_fn(index_map.len(), |i, j| self.adjacent(index_map[i], index_map[j]));
        Ok(InducedSubgraph { graph, index_map })
    }
}

/// An induced subgraph together with the original index of each of its vertices.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: GenericGraph,
    pub index_map: Vec<usize>,
}

impl InducedSubgraph {
    /// Maps a vertex set of the subgraph back into the parent graph.
    pub fn lift(&self, set: &VertexSet, parent_order: usize) -> VertexSet {
        let mut out = FixedBitSet::with_capacity(parent_order);
        for v in set.ones() {
            out.insert(self.index_map[v]);
        }
        out
    }
}

/// The Kneser graph `K(n,k)`: vertices are the `k`-subsets of `[n]` in
/// canonical order, adjacent when disjoint.
#[derive(Clone, Debug)]
pub struct KneserGraph {
    n: u32,
    k: u32,
    vertices: Vec<KSubset>,
    graph: GenericGraph,
}

impl KneserGraph {
    pub fn build(n: u32, k: u32) -> Result<Self> {
        Self::build_with_cap(n, k, DEFAULT_VERTEX_CAP)
    }

    pub fn build_with_cap(n: u32, k: u32, vertex_cap: u64) -> Result<Self> {
        if k == 0 || n < 2 * k {
            return Err(Error::Domain(format!("K({n},{k}) requires n >= 2k >= 2")));
        }
        let vertices = enumerate_k_subsets_capped(n, k, vertex_cap)?;
        let graph = GenericGraph::from_fn(vertices.len(), |u, v| vertices[u].is_disjoint(&vertices[v]));
        Ok(Self { n, k, vertices, graph })
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[KSubset] {
        &self.vertices
    }

    pub fn vertex(&self, index: usize) -> KSubset {
        self.vertices[index]
    }

    pub fn graph(&self) -> &GenericGraph {
        &self.graph
    }

    /// Canonical index of a `k`-subset of `[n]`.
    pub fn index_of(&self, subset: &KSubset) -> Option<usize> {
        if subset.len() != self.k || subset.ground_n() > self.n {
            return None;
        }
        self.vertices.binary_search(subset).ok()
    }

    /// Degree of every vertex, `C(n-k, k)`.
    pub fn regular_degree(&self) -> usize {
        binom::<u64>(self.n - self.k, self.k).expect("fits") as usize
    }

    fn check_element(&self, i: u32) -> Result<()> {
        if i == 0 || i > self.n {
            return Err(Error::Domain(format!("element {i} not in [1, {}]", self.n)));
        }
        Ok(())
    }

    /// The center `I(i)`: every vertex containing element `i`.
    pub fn center_set(&self, i: u32) -> Result<VertexSet> {
        self.check_element(i)?;
        let mut s = FixedBitSet::with_capacity(self.order());
        for (idx, v) in self.vertices.iter().enumerate() {
            if v.contains(i) {
                s.insert(idx);
            }
        }
        Ok(s)
    }

    /// The center `I(i)` as an independent-set certificate.
    pub fn center(&self, i: u32) -> Result<Certificate> {
        let set = self.center_set(i)?;
        Ok(Certificate::new(self.n, self.k, 0, set.ones().collect(), Provenance::Construction(format!("center-{i}"))))
    }

    /// Vertices outside `N[x] ∪ N[y]` for adjacent `x`, `y`.
    pub fn edge_nonneighbors(&self, x: usize, y: usize) -> Result<VertexSet> {
        if x >= self.order() || y >= self.order() || !self.graph.adjacent(x, y) {
            return Err(Error::Contract(format!("vertices {x} and {y} are not adjacent")));
        }
        let mut out = self.graph.full_set();
        out.difference_with(self.graph.neighbors(x));
        out.difference_with(self.graph.neighbors(y));
        out.set(x, false);
        out.set(y, false);
        Ok(out)
    }

    /// Vertices avoiding element `i`; they induce a copy of `K(n-1,k)`.
    pub fn avoiding(&self, i: u32) -> Result<VertexSet> {
        let mut s = self.center_set(i)?;
        s.toggle_range(..);
        Ok(s)
    }
}
