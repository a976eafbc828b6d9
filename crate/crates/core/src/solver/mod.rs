//! Exact maximum degree-bounded induced subgraphs.
//!
//! `d = 0` gives the independence number, `d = 1` the dissociation number.
//! [`solve`] works on any graph; [`solve_kneser`] adds the Kneser graph's
//! symmetry and closed-form bounds at the root.

mod bits;
mod brute;
mod engine;
mod heuristic;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bounds;
use crate::error::{Error, Result};
use crate::graph::{GenericGraph, KneserGraph, VertexSet};
use crate::subset::KSubset;

use bits::Bits;
use engine::{frontier, Node, Problem, Shared, Worker};

pub use brute::{brute_force, BRUTE_FORCE_CAP};
pub use heuristic::heuristic_lower;

/// Largest graph the exact search accepts.
pub const MAX_SEARCH_ORDER: usize = 64 * 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
    pub threads: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::unlimited()
    }
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        Self { max_nodes: None, max_time: None, threads: 1 }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn with_max_nodes(mut self, nodes: u64) -> Self {
        self.max_nodes = Some(nodes);
        self
    }

    pub fn with_max_time(mut self, time: Duration) -> Self {
        self.max_time = Some(time);
        self
    }
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub best_size: usize,
    pub witness: VertexSet,
    /// `best_size` is proven maximum. False whenever a budget ran out.
    pub optimal: bool,
    pub nodes_explored: u64,
    pub wall_time: Duration,
    /// Name of the bound that closed the search at the root, if one did.
    pub bound_source: Option<String>,
}

/// Wire format of a solve result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveJson {
    pub size: usize,
    pub witness: Vec<Vec<u32>>,
    pub optimal: bool,
    pub nodes: u64,
    /// Wall time; omitted when a byte-stable rendering is wanted.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl SolveJson {
    /// Drops the wall time so repeated runs render identically.
    pub fn without_timing(mut self) -> Self {
        self.millis = None;
        self
    }
}

impl SolveResult {
    /// JSON view with each witness vertex written as its element list.
    pub fn to_json(&self, g: &KneserGraph) -> SolveJson {
        SolveJson {
            size: self.best_size,
            witness: self.witness.ones().map(|v| g.vertex(v).to_vec()).collect(),
            optimal: self.optimal,
            nodes: self.nodes_explored,
            millis: Some(self.wall_time.as_millis() as u64),
        }
    }

    /// JSON view of a result on a generic graph; witness vertices are
    /// 1-based indices.
    pub fn to_json_indices(&self) -> SolveJson {
        SolveJson {
            size: self.best_size,
            witness: self.witness.ones().map(|v| vec![v as u32 + 1]).collect(),
            optimal: self.optimal,
            nodes: self.nodes_explored,
            millis: Some(self.wall_time.as_millis() as u64),
        }
    }
}

/// How the search is seeded.
#[derive(Clone, Debug, Default)]
struct Plan {
    /// Alternative root subproblems whose union covers at least one optimum.
    roots: Vec<RootFix>,
    /// A feasible starting set.
    incumbent: Option<VertexSet>,
    /// A proven upper bound on the optimum, with its name.
    ceiling: Option<(usize, String)>,
}

#[derive(Clone, Debug)]
enum RootFix {
    /// `v` is in the solution and has no neighbour there.
    Isolated(usize),
    /// All listed vertices are in the solution.
    Include(Vec<usize>),
}

/// Maximum size of a vertex set of `g` inducing maximum degree at most `d`.
pub fn solve(g: &GenericGraph, d: usize, budget: &SearchBudget) -> Result<SolveResult> {
    run(g, d, budget, Plan::default())
}

/// [`solve`] on `K(n,k)`.
pub fn solve_kneser(n: u32, k: u32, d: usize, budget: &SearchBudget) -> Result<SolveResult> {
    let g = KneserGraph::build(n, k)?;
    solve_kneser_graph(&g, d, budget)
}

/// Kneser specialisation.
///
/// `Aut(K(n,k))` contains `Sym(n)`, which is transitive on vertices and on
/// ordered pairs of adjacent vertices. So some maximum solution contains
/// `x = {1..k}`, and if `x` has a neighbour in it, some maximum solution
/// contains both `x` and `y = {k+1..2k}`. The search therefore explores two
/// roots (`x` isolated; `x` and `y` both in), starts from the best explicit
/// construction and stops as soon as it meets the closed-form upper bound.
pub fn solve_kneser_graph(g: &KneserGraph, d: usize, budget: &SearchBudget) -> Result<SolveResult> {
    let (n, k) = (g.n(), g.k());
    let x = 0;
    let y_subset = KSubset::from_mask(((1u64 << k) - 1) << k, n)?;
    let y = g.index_of(&y_subset).expect("n >= 2k");
    let roots =
        if d == 0 { vec![RootFix::Isolated(x)] } else { vec![RootFix::Isolated(x), RootFix::Include(vec![x, y])] };

    let alpha: u128 = bounds::alpha_kneser(n, k)?;
    let (ceiling, incumbent) = if k >= 2 {
        let seed = if d == 0 { g.center_set(1)? } else { heuristic_lower(n, k)?.to_set(g.order()) };
        let ceiling = match d {
            0 => (alpha, bounds::LOWER_CENTER.to_string()),
            1 => {
                let report = bounds::report::<u128>(n, k)?;
                let name = report
                    .upper
                    .iter()
                    .find(|b| b.value == report.best_upper)
                    .map(|b| b.name)
                    .unwrap_or(bounds::UPPER_TWICE_ALPHA);
                (report.best_upper, name.to_string())
            }
            _ => (alpha.saturating_mul(d as u128 + 1), "degree-colouring".to_string()),
        };
        (Some(ceiling), Some(seed))
    } else {
        // K(n,1) is complete: pick d + 1 vertices
        let mut seed = VertexSet::with_capacity(g.order());
        seed.insert_range(..(d + 1).min(g.order()));
        (None, Some(seed))
    };
    let ceiling = ceiling.map(|(v, name)| (usize::try_from(v).unwrap_or(usize::MAX), name));
    run(g.graph(), d, budget, Plan { roots, incumbent, ceiling })
}

/// `psi_3(g) = |V| - diss(g)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Psi3 {
    pub value: usize,
    pub optimal: bool,
}

pub fn psi3(g: &GenericGraph, budget: &SearchBudget) -> Result<Psi3> {
    let r = solve(g, 1, budget)?;
    Ok(Psi3 { value: g.order() - r.best_size, optimal: r.optimal })
}

fn run(g: &GenericGraph, d: usize, budget: &SearchBudget, plan: Plan) -> Result<SolveResult> {
    let order = g.order();
    match order.div_ceil(64) {
        0 | 1 => run_width::<1>(g, d, budget, plan),
        2 => run_width::<2>(g, d, budget, plan),
        3 | 4 => run_width::<4>(g, d, budget, plan),
        5..=8 => run_width::<8>(g, d, budget, plan),
        9..=16 => run_width::<16>(g, d, budget, plan),
        17..=32 => run_width::<32>(g, d, budget, plan),
        33..=64 => run_width::<64>(g, d, budget, plan),
        _ => Err(Error::Capacity(format!("exact search supports at most {MAX_SEARCH_ORDER} vertices, got {order}"))),
    }
}

fn run_width<const W: usize>(g: &GenericGraph, d: usize, budget: &SearchBudget, plan: Plan) -> Result<SolveResult> {
    let start = Instant::now();
    let order = g.order();
    let problem = Problem::<W> { order, d, adj: (0..order).map(|v| Bits::from_fixed(g.neighbors(v))).collect() };
    let incumbent = match &plan.incumbent {
        Some(set) => {
            if !crate::certify::check_max_degree(g, set, d) {
                return Err(Error::Contract("seed set violates the degree limit".into()));
            }
            Bits::from_fixed(set)
        }
        None => Bits::EMPTY,
    };
    let ceiling = plan.ceiling.as_ref().map_or(order, |c| c.0.min(order));
    let shared = Shared::new(incumbent, ceiling, budget.max_nodes, budget.max_time.map(|t| start + t));

    let roots: Vec<Node<W>> = if plan.roots.is_empty() {
        vec![problem.root()]
    } else {
        plan.roots.iter().filter_map(|fix| apply_fix(&problem, fix)).collect()
    };

    let threads = budget.threads.max(1);
    if !shared.closed() {
        if threads == 1 {
            let mut worker = Worker::new(&problem, &shared);
            for root in roots {
                worker.run(root);
            }
        } else {
            let tasks = frontier(&problem, &shared, roots, 32 * threads);
            let next = std::sync::atomic::AtomicUsize::new(0);
            std::thread::scope(|scope| {
                for _ in 0..threads {
                    scope.spawn(|| {
                        let mut worker = Worker::new(&problem, &shared);
                        loop {
                            let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                            if i >= tasks.len() || shared.stopped() {
                                break;
                            }
                            worker.run(tasks[i]);
                        }
                    });
                }
            });
        }
    }

    let closed = shared.closed();
    let optimal = closed || !shared.aborted();
    let bound_source = if closed {
        Some(plan.ceiling.as_ref().filter(|c| c.0 <= order).map_or_else(|| "vertex-count".to_string(), |c| c.1.clone()))
    } else {
        None
    };
    let witness = shared.witness();
    Ok(SolveResult {
        best_size: witness.count(),
        witness: witness.to_fixed(order),
        optimal,
        nodes_explored: shared.nodes(),
        wall_time: start.elapsed(),
        bound_source,
    })
}

fn apply_fix<const W: usize>(problem: &Problem<W>, fix: &RootFix) -> Option<Node<W>> {
    let mut node = problem.root();
    match fix {
        RootFix::Isolated(v) => node = problem.include_isolated(&node, *v),
        RootFix::Include(vs) => {
            for &v in vs {
                if !node.undecided.contains(v) {
                    return None;
                }
                node = problem.include(&node, v);
            }
        }
    }
    Some(node)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::check_max_degree;

    fn exact(g: &GenericGraph, d: usize) -> SolveResult {
        let r = solve(g, d, &SearchBudget::unlimited()).unwrap();
        assert!(r.optimal);
        assert_eq!(r.witness.count_ones(..), r.best_size);
        assert!(check_max_degree(g, &r.witness, d));
        r
    }

    #[test]
    fn petersen() {
        let g = KneserGraph::build(5, 2).unwrap();
        assert_eq!(exact(g.graph(), 1).best_size, 6);
        assert_eq!(exact(g.graph(), 0).best_size, 4);
    }

    #[test]
    fn matching_graphs_are_whole() {
        let g = KneserGraph::build(6, 3).unwrap();
        assert_eq!(exact(g.graph(), 1).best_size, 20);
        assert_eq!(exact(g.graph(), 0).best_size, 10);
    }

    #[test]
    fn odd_graph_three() {
        let g = KneserGraph::build(7, 3).unwrap();
        assert_eq!(exact(g.graph(), 1).best_size, 20);
    }

    #[test]
    fn kneser_wrapper() {
        let b = SearchBudget::unlimited();
        for (n, k, want) in [(9, 2, 8), (7, 2, 6), (8, 3, 21), (5, 2, 6)] {
            let r = solve_kneser(n, k, 1, &b).unwrap();
            assert!(r.optimal);
            assert_eq!(r.best_size, want, "K({n},{k})");
        }
        // the seed already meets the closed-form ceiling here
        let r = solve_kneser(9, 2, 1, &b).unwrap();
        assert_eq!(r.bound_source.as_deref(), Some(bounds::UPPER_EDGE_SPLIT));
        assert_eq!(r.nodes_explored, 0);
        // complete graph K(4,1)
        assert_eq!(solve_kneser(4, 1, 1, &b).unwrap().best_size, 2);
        assert_eq!(solve_kneser(4, 1, 0, &b).unwrap().best_size, 1);
    }

    #[test]
    fn witness_is_deterministic() {
        let g = KneserGraph::build(8, 3).unwrap();
        let b = SearchBudget::unlimited();
        let a = solve(g.graph(), 1, &b).unwrap();
        let c = solve(g.graph(), 1, &b).unwrap();
        assert_eq!(a.witness, c.witness);
        assert_eq!(a.nodes_explored, c.nodes_explored);
    }

    #[test]
    fn budget_exhaustion_keeps_incumbent() {
        let g = KneserGraph::build(9, 4).unwrap();
        let r = solve(g.graph(), 1, &SearchBudget::unlimited().with_max_nodes(50)).unwrap();
        assert!(!r.optimal);
        assert!(r.best_size > 0);
        assert!(check_max_degree(g.graph(), &r.witness, 1));
        let r = solve(g.graph(), 1, &SearchBudget::unlimited().with_max_time(Duration::from_millis(1))).unwrap();
        assert!(!r.optimal);
        assert!(check_max_degree(g.graph(), &r.witness, 1));
    }

    #[test]
    fn psi3_duality() {
        let b = SearchBudget::unlimited();
        let p = KneserGraph::build(5, 2).unwrap();
        assert_eq!(psi3(p.graph(), &b).unwrap(), Psi3 { value: 4, optimal: true });
        let m = KneserGraph::build(4, 2).unwrap();
        assert_eq!(psi3(m.graph(), &b).unwrap().value, 0);
        let g = KneserGraph::build(8, 3).unwrap();
        assert_eq!(psi3(g.graph(), &b).unwrap().value, 35);
    }

    #[test]
    fn json_views() {
        let g = KneserGraph::build(5, 2).unwrap();
        let r = solve_kneser(5, 2, 1, &SearchBudget::unlimited()).unwrap();
        let j = r.to_json(&g);
        assert_eq!(j.size, 6);
        assert_eq!(j.witness.len(), 6);
        assert!(j.optimal);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.starts_with(r#"{"size":6,"witness":[[1,2],"#));
    }

    #[test]
    fn empty_graph() {
        let r = exact(&GenericGraph::empty(0), 1);
        assert_eq!(r.best_size, 0);
        let r = exact(&GenericGraph::empty(5), 0);
        assert_eq!(r.best_size, 5);
    }
}
