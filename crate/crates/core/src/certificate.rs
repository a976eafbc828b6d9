use fixedbitset::FixedBitSet;

use crate::graph::VertexSet;

/// Who produced a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Solver,
    /// A named explicit construction (center, matching subgraph, ...).
    Construction(String),
    User,
}

/// A vertex subset claimed to induce maximum degree at most `d` in `K(n,k)`
/// (or, with `n = k = 0`, in a generic graph).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub n: u32,
    pub k: u32,
    pub d: usize,
    /// Sorted canonical vertex indices.
    pub indices: Vec<usize>,
    pub provenance: Provenance,
}

impl Certificate {
    pub fn new(n: u32, k: u32, d: usize, mut indices: Vec<usize>, provenance: Provenance) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Self { n, k, d, indices, provenance }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn to_set(&self, order: usize) -> VertexSet {
        let mut s = FixedBitSet::with_capacity(order);
        s.extend(self.indices.iter().copied());
        s
    }
}
