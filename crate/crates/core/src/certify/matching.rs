use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

/// Outcome of [`find_x_matching`]: a matching saturating `X`, or a set
/// `W ⊆ X` with `|N(W)| < |W|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchingResult<X, Y> {
    Matching(Vec<(X, Y)>),
    Violator { set: Vec<X>, neighborhood: Vec<Y> },
}

impl<X, Y> MatchingResult<X, Y> {
    pub fn is_matching(&self) -> bool {
        matches!(self, MatchingResult::Matching(_))
    }
}

const FREE: usize = usize::MAX;

/// Grows a matching one augmenting path at a time (BFS over alternating
/// paths). When some `u ∈ X` has no augmenting path, the `X` vertices its
/// alternating tree reaches form a Hall violator: every `Y` vertex reached is
/// matched back into the tree, so `|N(W)| = |W| - 1`.
///
/// Edges whose endpoints are not listed in `x_side` / `y_side` are ignored.
pub fn find_x_matching<X, Y>(x_side: &[X], y_side: &[Y], edges: &[(X, Y)]) -> MatchingResult<X, Y>
where
    X: Clone + Eq + Hash,
    Y: Clone + Eq + Hash,
{
    let xi: HashMap<&X, usize> = x_side.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let yi: HashMap<&Y, usize> = y_side.iter().enumerate().map(|(i, y)| (y, i)).collect();
    let mut adj = vec![Vec::new(); x_side.len()];
    for (x, y) in edges {
        if let (Some(&a), Some(&b)) = (xi.get(x), yi.get(y)) {
            if !adj[a].contains(&b) {
                adj[a].push(b);
            }
        }
    }

    let mut mate_x = vec![FREE; x_side.len()];
    let mut mate_y = vec![FREE; y_side.len()];
    for root in 0..x_side.len() {
        // BFS over X vertices; parent[y] = the X vertex that reached y
        let mut parent = vec![FREE; y_side.len()];
        let mut seen_x = vec![false; x_side.len()];
        let mut queue = VecDeque::from([root]);
        seen_x[root] = true;
        let mut end = None;
        'bfs: while let Some(a) = queue.pop_front() {
            for &b in &adj[a] {
                if parent[b] != FREE {
                    continue;
                }
                parent[b] = a;
                if mate_y[b] == FREE {
                    end = Some(b);
                    break 'bfs;
                }
                let next = mate_y[b];
                if !seen_x[next] {
                    seen_x[next] = true;
                    queue.push_back(next);
                }
            }
        }
        match end {
            Some(mut b) => loop {
                let a = parent[b];
                let prev = mate_x[a];
                mate_x[a] = b;
                mate_y[b] = a;
                if prev == FREE {
                    break;
                }
                b = prev;
            },
            None => {
                let set = (0..x_side.len()).filter(|&a| seen_x[a]).map(|a| x_side[a].clone()).collect();
                let neighborhood =
                    (0..y_side.len()).filter(|&b| parent[b] != FREE).map(|b| y_side[b].clone()).collect();
                return MatchingResult::Violator { set, neighborhood };
            }
        }
    }
    MatchingResult::Matching(mate_x.iter().enumerate().map(|(a, &b)| (x_side[a].clone(), y_side[b].clone())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn single_edge() {
        let r = find_x_matching(&['a'], &['b'], &[('a', 'b')]);
        assert_eq!(r, MatchingResult::Matching(vec![('a', 'b')]));
    }

    #[test]
    fn pigeonhole_violator() {
        let r = find_x_matching(&['a', 'b'], &['c'], &[('a', 'c'), ('b', 'c')]);
        match r {
            MatchingResult::Violator { set, neighborhood } => {
                assert_eq!(set, vec!['a', 'b']);
                assert_eq!(neighborhood, vec!['c']);
            }
            _ => panic!("expected a violator"),
        }
    }

    #[test]
    fn augmenting_path_needed() {
        // greedy a-1 blocks b; augmenting path b-1-a-2 fixes it
        let r = find_x_matching(&['a', 'b'], &[1, 2], &[('a', 1), ('a', 2), ('b', 1)]);
        let MatchingResult::Matching(m) = r else { panic!("expected matching") };
        let set: HashSet<_> = m.into_iter().collect();
        assert_eq!(set, HashSet::from([('a', 2), ('b', 1)]));
    }

    #[test]
    fn isolated_x_vertex() {
        let r: MatchingResult<u8, u8> = find_x_matching(&[0, 1], &[5], &[(0, 5)]);
        match r {
            MatchingResult::Violator { set, neighborhood } => {
                assert_eq!(set, vec![1]);
                assert!(neighborhood.is_empty());
            }
            _ => panic!("expected a violator"),
        }
        let empty: MatchingResult<u8, u8> = find_x_matching(&[], &[], &[]);
        assert_eq!(empty, MatchingResult::Matching(vec![]));
    }
}
