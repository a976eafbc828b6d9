use crate::error::{Error, Result};
use crate::graph::{KneserGraph, VertexSet};

/// The odd graph `O_k = K(2k+1, k)` split into the center
/// `U = I(2k+1)` and its complement `D`, which induces a perfect matching.
///
/// Every `u ∈ U` has `k + 1` neighbours in `D` and every vertex of `D` has
/// `k` neighbours in `U`, so `k |N(L)| >= (k+1) |L|` for each `L ⊆ U`.
#[derive(Clone, Debug)]
pub struct OddExpansion {
    graph: KneserGraph,
    center: Vec<usize>,
    rest: VertexSet,
}

impl OddExpansion {
    pub fn new(k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::Domain(format!("odd graph needs k >= 2, got {k}")));
        }
        let graph = KneserGraph::build(2 * k + 1, k)?;
        let center_set = graph.center_set(2 * k + 1)?;
        let rest = graph.avoiding(2 * k + 1)?;
        Ok(Self { center: center_set.ones().collect(), graph, rest })
    }

    pub fn k(&self) -> u32 {
        self.graph.k()
    }

    pub fn graph(&self) -> &KneserGraph {
        &self.graph
    }

    /// Canonical indices of the center `I(2k+1)`, ascending.
    pub fn center(&self) -> &[usize] {
        &self.center
    }

    /// `D`: vertices avoiding element `2k+1`.
    pub fn rest(&self) -> &VertexSet {
        &self.rest
    }

    /// `N(L) ∩ D`.
    pub fn neighborhood(&self, l: &VertexSet) -> VertexSet {
        let mut out = VertexSet::with_capacity(self.graph.order());
        for u in l.ones() {
            out.union_with(self.graph.graph().neighbors(u));
        }
        out.intersect_with(&self.rest);
        out
    }

    /// Exact check of `k |N(L) ∩ D| >= (k+1) |L|` for nonempty `L ⊆ I(2k+1)`.
    pub fn check(&self, l: &VertexSet) -> Result<bool> {
        let len = l.count_ones(..);
        if len == 0 {
            return Err(Error::Contract("L must be nonempty".into()));
        }
        if let Some(v) = l.ones().find(|&v| v >= self.graph.order() || self.rest.contains(v)) {
            return Err(Error::Contract(format!("vertex {v} is not in the center")));
        }
        let k = self.k() as usize;
        Ok(k * self.neighborhood(l).count_ones(..) >= (k + 1) * len)
    }

    /// [`check`](Self::check) for `L` given as a bitmask over [`center`](Self::center).
    pub fn check_mask(&self, mask: u64) -> Result<bool> {
        let mut l = VertexSet::with_capacity(self.graph.order());
        for (bit, &v) in self.center.iter().enumerate() {
            if bit < 64 && mask >> bit & 1 == 1 {
                l.insert(v);
            }
        }
        self.check(&l)
    }

    /// Bipartite edges between `L` and `N(L) ∩ D`.
    pub fn edges_from(&self, l: &VertexSet) -> Vec<(usize, usize)> {
        l.ones()
            .flat_map(|u| {
                self.graph.graph().neighbors(u).ones().filter(|&x| self.rest.contains(x)).map(move |x| (u, x))
            })
            .collect()
    }
}

/// One-shot form of [`OddExpansion::check`].
pub fn odd_expansion_check(k: u32, l: &VertexSet) -> Result<bool> {
    OddExpansion::new(k)?.check(l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_has_k_plus_one_neighbours() {
        let o = OddExpansion::new(2).unwrap();
        assert_eq!(o.center().len(), 4);
        let mut l = VertexSet::with_capacity(10);
        l.insert(o.center()[0]);
        assert_eq!(o.neighborhood(&l).count_ones(..), 3);
        assert!(o.check(&l).unwrap());
    }

    #[test]
    fn whole_center_by_brute_force() {
        let o = OddExpansion::new(2).unwrap();
        let g = o.graph();
        let mut l = VertexSet::with_capacity(g.order());
        o.center().iter().for_each(|&v| l.insert(v));
        // independent union of neighbour lists from the raw subsets
        let nbrs: std::collections::BTreeSet<usize> = o
            .center()
            .iter()
            .flat_map(|&u| {
                (0..g.order()).filter(move |&x| g.vertex(x).is_disjoint(&g.vertex(u)) && !g.vertex(x).contains(5))
            })
            .collect();
        assert_eq!(o.neighborhood(&l).count_ones(..), nbrs.len());
        assert!(2 * nbrs.len() >= 3 * o.center().len());
        assert!(o.check(&l).unwrap());
    }

    #[test]
    fn contract_errors() {
        let o = OddExpansion::new(2).unwrap();
        let empty = VertexSet::with_capacity(10);
        assert!(o.check(&empty).is_err());
        let mut outside = VertexSet::with_capacity(10);
        outside.insert(0); // {1,2} avoids 5
        assert!(o.check(&outside).is_err());
        assert!(OddExpansion::new(1).is_err());
    }
}
