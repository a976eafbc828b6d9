use crate::error::{Error, Result};
use crate::graph::GenericGraph;

/// Largest order [`brute_force`] accepts.
pub const BRUTE_FORCE_CAP: usize = 26;

/// Exhaustive reference for the maximum size of a vertex set inducing maximum
/// degree at most `d`. Walks every include/exclude decision in vertex order,
/// cutting a branch only when it breaks the degree limit.
pub fn brute_force(g: &GenericGraph, d: usize) -> Result<usize> {
    let n = g.order();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::Capacity(format!("brute force is capped at {BRUTE_FORCE_CAP} vertices, got {n}")));
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).ones().fold(0u32, |m, u| m | (1 << u))).collect();
    let mut best = 0;
    walk(&adj, d as u32, 0, 0, &mut best);
    Ok(best)
}

fn walk(adj: &[u32], d: u32, v: usize, chosen: u32, best: &mut usize) {
    if v == adj.len() {
        *best = (*best).max(chosen.count_ones() as usize);
        return;
    }
    walk(adj, d, v + 1, chosen, best);
    let with = chosen | (1 << v);
    let ok = (adj[v] & with).count_ones() <= d && bits(adj[v] & chosen).all(|u| (adj[u] & with).count_ones() <= d);
    if ok {
        walk(adj, d, v + 1, with, best);
    }
}

fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let tz = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(tz)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::KneserGraph;

    #[test]
    fn small_cases() {
        let petersen = KneserGraph::build(5, 2).unwrap();
        assert_eq!(brute_force(petersen.graph(), 1).unwrap(), 6);
        assert_eq!(brute_force(petersen.graph(), 0).unwrap(), 4);
        let m = KneserGraph::build(4, 2).unwrap();
        assert_eq!(brute_force(m.graph(), 1).unwrap(), 6);
        let p3 = GenericGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(brute_force(&p3, 1).unwrap(), 2);
        assert_eq!(brute_force(&GenericGraph::empty(0), 1).unwrap(), 0);
    }

    #[test]
    fn capacity() {
        assert!(brute_force(&GenericGraph::empty(27), 1).is_err());
    }
}
