//! Branch-and-bound search for a largest vertex set inducing maximum degree
//! at most `d`.
//!
//! A node keeps three sets: `included`, `undecided`, and `saturated` (the
//! included vertices that already have `d` included neighbours). Every
//! undecided vertex can be added to `included` without breaking the degree
//! limit; `include` restores that after each step, so branching never has to
//! backtrack on infeasibility.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use super::bits::Bits;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Node<const W: usize> {
    pub included: Bits<W>,
    pub undecided: Bits<W>,
    pub saturated: Bits<W>,
}

pub(crate) struct Problem<const W: usize> {
    pub order: usize,
    pub d: usize,
    pub adj: Vec<Bits<W>>,
}

impl<const W: usize> Problem<W> {
    pub fn root(&self) -> Node<W> {
        Node { included: Bits::EMPTY, undecided: Bits::full(self.order), saturated: Bits::EMPTY }
    }

    #[inline]
    fn included_degree(&self, node: &Node<W>, v: usize) -> usize {
        self.adj[v].and_count(&node.included)
    }

    /// Adds undecided vertex `v` and drops every undecided vertex that could
    /// no longer be added.
    pub fn include(&self, node: &Node<W>, v: usize) -> Node<W> {
        debug_assert!(node.undecided.contains(v));
        let mut next = *node;
        let old = node.included;
        next.included.insert(v);
        next.undecided.remove(v);
        for u in self.adj[v].and(&old).iter() {
            if self.included_degree(&next, u) == self.d {
                next.saturated.insert(u);
                next.undecided.andnot_assign(&self.adj[u]);
            }
        }
        if self.adj[v].and_count(&old) == self.d {
            next.saturated.insert(v);
            next.undecided.andnot_assign(&self.adj[v]);
        }
        for w in next.undecided.and(&self.adj[v]).iter() {
            if self.included_degree(&next, w) > self.d {
                next.undecided.remove(w);
            }
        }
        next
    }

    /// Includes `v` with no neighbour allowed in the solution.
    pub fn include_isolated(&self, node: &Node<W>, v: usize) -> Node<W> {
        let mut next = self.include(node, v);
        next.undecided.andnot_assign(&self.adj[v]);
        next
    }

    /// Upper bound on how many undecided vertices can still be added.
    ///
    /// Undecided vertices are split into disjoint groups, each with a cap on
    /// how many of its members a feasible set can hold:
    /// - the undecided neighbours of an unsaturated included vertex `u`, cap
    ///   `d - deg(u)`;
    /// - a clique, cap `d + 1`;
    /// - for `d = 1`, a 4-cycle, cap 2;
    /// - a star with `d + 1` leaves, cap `d + 1`;
    /// - a single vertex, cap 1.
    pub fn estimate(&self, node: &Node<W>) -> usize {
        let d = self.d;
        let mut rem = node.undecided;
        let mut bound = 0;
        let mut open = node.included;
        open.andnot_assign(&node.saturated);
        for u in open.iter() {
            let cap = d - self.included_degree(node, u);
            let group = self.adj[u].and(&rem);
            if group.count() > cap {
                bound += cap;
                rem.andnot_assign(&group);
            }
        }
        while let Some(v) = rem.first() {
            rem.remove(v);
            let nbrs = self.adj[v].and(&rem);
            if nbrs.is_empty() {
                bound += 1;
                continue;
            }
            // greedy clique through v
            let mut clique = Bits::EMPTY;
            let mut size = 1;
            let mut cand = nbrs;
            while let Some(w) = cand.first() {
                clique.insert(w);
                size += 1;
                cand = cand.and(&self.adj[w]);
            }
            if size > d + 1 {
                bound += d + 1;
                rem.andnot_assign(&clique);
                continue;
            }
            if d == 1 {
                if let Some(cycle) = self.four_cycle(&nbrs, &rem) {
                    bound += 2;
                    for w in cycle {
                        rem.remove(w);
                    }
                    continue;
                }
            }
            if nbrs.count() > d {
                bound += d + 1;
                for w in nbrs.iter().take(d + 1) {
                    rem.remove(w);
                }
                continue;
            }
            bound += 1;
        }
        bound
    }

    fn four_cycle(&self, nbrs: &Bits<W>, rem: &Bits<W>) -> Option<[usize; 3]> {
        let mut rest = *nbrs;
        while let Some(a) = rest.first() {
            rest.remove(a);
            let far = self.adj[a].and(rem);
            let mut others = rest;
            while let Some(b) = others.first() {
                others.remove(b);
                if let Some(w) = far.and(&self.adj[b]).first() {
                    return Some([a, b, w]);
                }
            }
        }
        None
    }

    /// Undecided vertex with the most undecided neighbours, lowest index on ties.
    pub fn branch_vertex(&self, node: &Node<W>) -> usize {
        let mut best = (0usize, usize::MAX);
        for v in node.undecided.iter() {
            let deg = self.adj[v].and_count(&node.undecided);
            if best.1 == usize::MAX || deg > best.0 {
                best = (deg, v);
            }
        }
        best.1
    }
}

/// Search state shared by all workers.
pub(crate) struct Shared<const W: usize> {
    best: AtomicUsize,
    witness: Mutex<(usize, Bits<W>)>,
    nodes: AtomicU64,
    /// Budget exhausted.
    aborted: AtomicBool,
    /// Incumbent reached the global upper bound; nothing left to prove.
    closed: AtomicBool,
    ceiling: usize,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
}

impl<const W: usize> Shared<W> {
    pub fn new(incumbent: Bits<W>, ceiling: usize, max_nodes: Option<u64>, deadline: Option<Instant>) -> Self {
        let size = incumbent.count();
        Self {
            best: AtomicUsize::new(size),
            witness: Mutex::new((size, incumbent)),
            nodes: AtomicU64::new(0),
            aborted: AtomicBool::new(false),
            closed: AtomicBool::new(size >= ceiling),
            ceiling,
            max_nodes,
            deadline,
        }
    }

    #[inline]
    pub fn best(&self) -> usize {
        self.best.load(Ordering::Acquire)
    }

    /// Records `set` if it strictly improves the incumbent.
    pub fn offer(&self, set: Bits<W>) {
        let size = set.count();
        if size <= self.best() {
            return;
        }
        let mut guard = self.witness.lock().expect("incumbent lock poisoned");
        if size > guard.0 {
            *guard = (size, set);
            self.best.store(size, Ordering::Release);
            if size >= self.ceiling {
                self.closed.store(true, Ordering::Release);
            }
        }
    }

    #[inline]
    pub fn stopped(&self) -> bool {
        self.aborted.load(Ordering::Relaxed) || self.closed.load(Ordering::Relaxed)
    }

    pub fn aborted(&self) -> bool {
        self.aborted.load(Ordering::Acquire)
    }

    pub fn closed(&self) -> bool {
        self.closed.load(Ordering::Acquire)
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Acquire)
    }

    pub fn witness(&self) -> Bits<W> {
        self.witness.lock().expect("incumbent lock poisoned").1
    }

    /// Adds `batch` explored nodes and checks the budget.
    pub fn charge(&self, batch: u64) {
        let total = self.nodes.fetch_add(batch, Ordering::AcqRel) + batch;
        let over_nodes = self.max_nodes.is_some_and(|m| total >= m);
        let over_time = self.deadline.is_some_and(|t| Instant::now() >= t);
        if over_nodes || over_time {
            self.aborted.store(true, Ordering::Release);
        }
    }
}

const CHARGE_EVERY: u64 = 256;

/// Depth-first worker; node counts are flushed to `shared` in batches.
pub(crate) struct Worker<'a, const W: usize> {
    problem: &'a Problem<W>,
    shared: &'a Shared<W>,
    pending: u64,
}

impl<'a, const W: usize> Worker<'a, W> {
    pub fn new(problem: &'a Problem<W>, shared: &'a Shared<W>) -> Self {
        Self { problem, shared, pending: 0 }
    }

    pub fn run(&mut self, node: Node<W>) {
        self.dfs(node);
        self.flush();
    }

    fn flush(&mut self) {
        if self.pending > 0 {
            self.shared.charge(self.pending);
            self.pending = 0;
        }
    }

    fn dfs(&mut self, node: Node<W>) {
        self.pending += 1;
        if self.pending >= CHARGE_EVERY {
            self.flush();
        }
        if self.shared.stopped() {
            return;
        }
        let size = node.included.count();
        if size > self.shared.best() {
            self.shared.offer(node.included);
        }
        if node.undecided.is_empty() {
            return;
        }
        if size + self.problem.estimate(&node) <= self.shared.best() {
            return;
        }
        let v = self.problem.branch_vertex(&node);
        self.dfs(self.problem.include(&node, v));
        let mut without = node;
        without.undecided.remove(v);
        self.dfs(without);
    }
}

/// Splits the roots into at least `target` open subproblems in depth-first
/// order, pruning against the current incumbent as it goes.
pub(crate) fn frontier<const W: usize>(
    problem: &Problem<W>,
    shared: &Shared<W>,
    roots: Vec<Node<W>>,
    target: usize,
) -> Vec<Node<W>> {
    let mut layer = roots;
    let mut expanded = 0;
    for _ in 0..24 {
        if layer.len() >= target {
            break;
        }
        let mut next = Vec::with_capacity(layer.len() * 2);
        let mut grew = false;
        for node in layer {
            expanded += 1;
            let size = node.included.count();
            shared.offer(node.included);
            if node.undecided.is_empty() || size + problem.estimate(&node) <= shared.best() {
                continue;
            }
            let v = problem.branch_vertex(&node);
            next.push(problem.include(&node, v));
            let mut without = node;
            without.undecided.remove(v);
            next.push(without);
            grew = true;
        }
        layer = next;
        if !grew {
            break;
        }
    }
    shared.charge(expanded);
    layer
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Problem<1> {
        let mut adj = vec![Bits::<1>::EMPTY; n];
        for i in 0..n - 1 {
            adj[i].insert(i + 1);
            adj[i + 1].insert(i);
        }
        Problem { order: n, d: 1, adj }
    }

    #[test]
    fn include_propagates_saturation() {
        let p = path(5);
        let root = p.root();
        let a = p.include(&root, 1);
        // 1 has no included neighbour yet, all its neighbours stay open
        assert!(a.undecided.contains(0) && a.undecided.contains(2));
        let b = p.include(&a, 2);
        // edge 1-2 saturates both ends
        assert!(b.saturated.contains(1) && b.saturated.contains(2));
        assert!(!b.undecided.contains(0) && !b.undecided.contains(3));
        assert!(b.undecided.contains(4));
    }

    #[test]
    fn include_drops_overloaded_candidates() {
        // star centre 0 with leaves 1, 2: after taking both leaves the centre
        // would get degree 2
        let mut adj = vec![Bits::<1>::EMPTY; 3];
        for leaf in [1, 2] {
            adj[0].insert(leaf);
            adj[leaf].insert(0);
        }
        let p = Problem { order: 3, d: 1, adj };
        let n = p.include(&p.include(&p.root(), 1), 2);
        assert!(n.undecided.is_empty());
    }

    #[test]
    fn estimate_on_path_is_sound() {
        let p = path(3);
        assert!(p.estimate(&p.root()) >= 2);
        let p = path(6);
        assert!(p.estimate(&p.root()) >= 4);
    }
}
