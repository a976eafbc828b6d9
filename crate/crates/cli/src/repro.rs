//! One-shot reproduction of every numeric claim the toolkit checks.
//!
//! Each [`ReproRow`] pairs a claimed value with a value computed here,
//! either by an exact search, by closing the bound interval, or by an
//! exhaustive oracle check. Search rows go through an injectable
//! [`SolveFn`] so a harness can swap in a faulty solver.

use std::fmt::Write as _;
use std::sync::Arc;
use std::time::Duration;

use kneser_core::bounds::{self, ExactSource, LOWER_CENTER, UPPER_EDGE_SPLIT};
use kneser_core::certify::{
    check_max_degree, double_count_identity, find_x_matching, substrings_in_arrangement, ArrangementIter, OddExpansion,
};
use kneser_core::solver::{solve, SearchBudget, SolveResult};
use kneser_core::subset::enumerate_k_subsets;
use kneser_core::{GenericGraph, Int, KSubset, KneserGraph, Result, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Solver used by the search rows: `(graph, max degree, budget)`.
pub type SolveFn = Arc<dyn Fn(&GenericGraph, usize, &SearchBudget) -> Result<SolveResult> + Send + Sync>;

pub const DEFAULT_SEED: u64 = 20_160_321;

/// Time cap applied to stretch rows when no explicit budget is given.
pub const STRETCH_DEFAULT_TIME: Duration = Duration::from_secs(300);

/// Families sampled for the double-counting rows.
pub const DOUBLE_COUNT_FAMILIES: usize = 50;

/// Subsets sampled per odd graph for the matching rows.
pub const MATCHING_SAMPLES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactSolve,
    BoundClosure,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ExactSolve => "exact-solve",
            Method::BoundClosure => "bound-closure",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    SkippedBudget,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::SkippedBudget => "skipped-budget",
        }
    }
}

/// Which family of claims a row belongs to; `--rows` filters on these.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Group {
    K2,
    K3,
    Odd,
    N0,
    Katona,
    Hall,
    DoubleCount,
}

impl Group {
    pub const ALL: [Group; 7] =
        [Group::K2, Group::K3, Group::Odd, Group::N0, Group::Katona, Group::Hall, Group::DoubleCount];

    pub fn name(self) -> &'static str {
        match self {
            Group::K2 => "k2",
            Group::K3 => "k3",
            Group::Odd => "odd",
            Group::N0 => "n0",
            Group::Katona => "katona",
            Group::Hall => "hall",
            Group::DoubleCount => "double-count",
        }
    }

    pub fn parse(s: &str) -> Option<Group> {
        Group::ALL.into_iter().find(|g| g.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReproRow {
    pub label: String,
    pub group: Group,
    pub claimed: Int,
    pub source: String,
    /// `None` when the row was skipped or produced no trustworthy value.
    pub computed: Option<Int>,
    pub method: Method,
    pub status: Status,
    /// Budget exhaustion on a mandatory row is a failure, not a skip.
    pub mandatory: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ReproRow {
    fn new(label: String, group: Group, claimed: Int, source: &str, method: Method) -> Self {
        Self {
            label,
            group,
            claimed,
            source: source.to_string(),
            computed: None,
            method,
            status: Status::SkippedBudget,
            mandatory: true,
            note: None,
        }
    }

    fn computed(mut self, value: Int) -> Self {
        self.status = if value == self.claimed { Status::Match } else { Status::Mismatch };
        self.computed = Some(value);
        self
    }

    fn failed(mut self, note: impl Into<String>) -> Self {
        self.status = Status::Mismatch;
        self.computed = None;
        self.note = Some(note.into());
        self
    }

    fn skipped(mut self, note: impl Into<String>) -> Self {
        self.status = Status::SkippedBudget;
        self.computed = None;
        self.note = Some(note.into());
        self
    }

    fn optional(mut self) -> Self {
        self.mandatory = false;
        self
    }
}

#[derive(Clone)]
pub struct ReproConfig {
    /// Budget for every search row.
    pub budget: SearchBudget,
    /// Budget for stretch rows; defaults to `budget` with a time cap.
    pub stretch_budget: SearchBudget,
    pub seed: u64,
    /// Groups to run; empty means all.
    pub groups: Vec<Group>,
    pub solver: SolveFn,
}

impl ReproConfig {
    pub fn new(budget: SearchBudget) -> Self {
        let stretch_budget = if budget.max_time.is_none() && budget.max_nodes.is_none() {
            budget.clone().with_max_time(STRETCH_DEFAULT_TIME)
        } else {
            budget.clone()
        };
        Self {
            budget,
            stretch_budget,
            seed: DEFAULT_SEED,
            groups: Vec::new(),
            solver: Arc::new(|g: &GenericGraph, d: usize, b: &SearchBudget| solve(g, d, b)),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_groups(mut self, groups: Vec<Group>) -> Self {
        self.groups = groups;
        self
    }

    pub fn with_solver(mut self, solver: SolveFn) -> Self {
        self.solver = solver;
        self
    }

    fn wants(&self, g: Group) -> bool {
        self.groups.is_empty() || self.groups.contains(&g)
    }
}

/// Runs every selected row in a fixed order.
pub fn reproduce(cfg: &ReproConfig) -> Vec<ReproRow> {
    let mut rows = Vec::new();
    if cfg.wants(Group::K2) {
        for n in 5..=9 {
            let claimed = Int::from((n - 1).max(6));
            rows.push(search_row(cfg, n, 2, claimed, ExactSource::PairsFormula.name(), Group::K2, false));
        }
        for n in 10..=30 {
            rows.push(pairs_closure_row(n));
        }
    }
    if cfg.wants(Group::K3) {
        rows.push(search_row(cfg, 8, 3, 21, ExactSource::TriplesThreshold.name(), Group::K3, false));
        rows.push(center_row(9, 3, 28, ExactSource::TriplesThreshold.name()));
        rows.push(search_row(cfg, 9, 3, 28, ExactSource::TriplesThreshold.name(), Group::K3, true));
    }
    if cfg.wants(Group::Odd) {
        rows.push(search_row(cfg, 5, 2, 6, ExactSource::OddGraph.name(), Group::Odd, false));
        rows.push(search_row(cfg, 7, 3, 20, ExactSource::OddGraph.name(), Group::Odd, false));
    }
    if cfg.wants(Group::N0) {
        rows.push(n0prime_row(2, 7));
        rows.push(n0prime_row(3, 17));
    }
    if cfg.wants(Group::Katona) {
        for n in 5..=7 {
            rows.push(substring_row(cfg, n));
        }
    }
    if cfg.wants(Group::Hall) {
        for k in 2..=3 {
            rows.push(expansion_row(k));
            rows.push(matching_row(k, cfg.seed));
        }
    }
    if cfg.wants(Group::DoubleCount) {
        rows.push(double_count_row(cfg.seed));
    }
    rows
}

fn kneser_label(n: u32, k: u32, group: Group) -> String {
    if group == Group::Odd && n == 2 * k + 1 {
        format!("O_{k}")
    } else {
        format!("K({n},{k})")
    }
}

/// Solves `K(n,k)` as a plain graph, with no Kneser-specific bounds, and
/// checks the witness independently.
fn search_row(cfg: &ReproConfig, n: u32, k: u32, claimed: Int, source: &str, group: Group, stretch: bool) -> ReproRow {
    let row = ReproRow::new(kneser_label(n, k, group), group, claimed, source, Method::ExactSolve);
    let row = if stretch { row.optional() } else { row };
    let budget = if stretch { &cfg.stretch_budget } else { &cfg.budget };
    match checked_solve(cfg, n, k, budget) {
        Ok(Some((_, r))) => row.computed(r.best_size as Int),
        Ok(None) => row.skipped("search budget exhausted"),
        Err(e) => row.failed(e),
    }
}

/// Runs the configured solver; `Ok(None)` means the budget ran out.
fn checked_solve(
    cfg: &ReproConfig,
    n: u32,
    k: u32,
    budget: &SearchBudget,
) -> std::result::Result<Option<(KneserGraph, SolveResult)>, String> {
    let g = KneserGraph::build(n, k).map_err(|e| e.to_string())?;
    let r = (cfg.solver)(g.graph(), 1, budget).map_err(|e| e.to_string())?;
    if !r.optimal {
        return Ok(None);
    }
    if r.witness.count_ones(..) != r.best_size || !check_max_degree(g.graph(), &r.witness, 1) {
        return Err("solver witness fails the degree check".into());
    }
    Ok(Some((g, r)))
}

fn pairs_closure_row(n: u32) -> ReproRow {
    let claimed = Int::from((n - 1).max(6));
    let row = ReproRow::new(
        kneser_label(n, 2, Group::K2),
        Group::K2,
        claimed,
        ExactSource::PairsFormula.name(),
        Method::BoundClosure,
    );
    let rep = match bounds::report::<Int>(n, 2) {
        Ok(rep) => rep,
        Err(e) => return row.failed(e.to_string()),
    };
    match (rep.lower_named(LOWER_CENTER), rep.upper_named(UPPER_EDGE_SPLIT)) {
        (Some(lo), Some(hi)) if lo == hi => row.computed(*lo),
        (Some(lo), Some(hi)) => row.failed(format!("interval [{lo}, {hi}] is open")),
        _ => row.failed("center or edge-split bound missing"),
    }
}

/// The center `I(1)` is independent, hence a dissociation set of size
/// `C(n-1, k-1)`.
fn center_row(n: u32, k: u32, claimed: Int, source: &str) -> ReproRow {
    let row =
        ReproRow::new(format!("{} lower", kneser_label(n, k, Group::K3)), Group::K3, claimed, source, Method::Oracle);
    let result = KneserGraph::build(n, k).and_then(|g| {
        let c = g.center_set(1)?;
        Ok(check_max_degree(g.graph(), &c, 1).then(|| c.count_ones(..) as Int))
    });
    match result {
        Ok(Some(size)) => row.computed(size),
        Ok(None) => row.failed("center fails the degree check"),
        Err(e) => row.failed(e.to_string()),
    }
}

fn n0prime_row(k: u32, claimed: Int) -> ReproRow {
    let row =
        ReproRow::new(format!("n0'(k={k})"), Group::N0, claimed, "alpha-dominates-nonindependent", Method::Oracle);
    match bounds::n0prime::<Int>(k) {
        Ok(n) => row.computed(Int::from(n)),
        Err(e) => row.failed(e.to_string()),
    }
}

/// Counts arrangements in which an exactly solved maximum dissociation set
/// of `K(n,2)` fills at most `k+1 = 3` windows; the claim is that all do.
fn substring_row(cfg: &ReproConfig, n: u32) -> ReproRow {
    let total: Int = (1..Int::from(n)).product();
    let row =
        ReproRow::new(format!("windows K({n},2)"), Group::Katona, total, "at-most-k+1-substrings", Method::Oracle);
    let (g, r) = match checked_solve(cfg, n, 2, &cfg.budget) {
        Ok(Some(found)) => found,
        Ok(None) => return row.skipped("search budget exhausted"),
        Err(e) => return row.failed(e),
    };
    let family: Vec<KSubset> = r.witness.ones().map(|v| g.vertex(v)).collect();
    let counted = ArrangementIter::new(n).and_then(|iter| {
        let mut good: Int = 0;
        for c in iter {
            if substrings_in_arrangement(&c, &family, 2)? <= 3 {
                good += 1;
            }
        }
        Ok(good)
    });
    match counted {
        Ok(good) => row.computed(good),
        Err(e) => row.failed(e.to_string()),
    }
}

/// Counts nonempty `L ⊆ I(2k+1)` of `O_k` satisfying the expansion inequality.
fn expansion_row(k: u32) -> ReproRow {
    let label = format!("expansion O_{k}");
    let counted = OddExpansion::new(k).and_then(|o| {
        let total = (1u64 << o.center().len()) - 1;
        let mut good: Int = 0;
        for mask in 1..=total {
            if o.check_mask(mask)? {
                good += 1;
            }
        }
        Ok((Int::from(total), good))
    });
    match counted {
        Ok((total, good)) => {
            ReproRow::new(label, Group::Hall, total, "odd-graph-expansion", Method::Oracle).computed(good)
        }
        Err(e) => ReproRow::new(label, Group::Hall, 0, "odd-graph-expansion", Method::Oracle).failed(e.to_string()),
    }
}

/// Counts sampled `L ⊆ I(2k+1)` that `L` can be matched into `N(L)`.
fn matching_row(k: u32, seed: u64) -> ReproRow {
    let row = ReproRow::new(
        format!("matching O_{k}"),
        Group::Hall,
        MATCHING_SAMPLES as Int,
        "hall-x-matching",
        Method::Oracle,
    );
    let o = match OddExpansion::new(k) {
        Ok(o) => o,
        Err(e) => return row.failed(e.to_string()),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(k));
    let c = o.center().len();
    let mut good: Int = 0;
    for _ in 0..MATCHING_SAMPLES {
        let mask = rng.gen_range(1u64..1 << c);
        let mut l = VertexSet::with_capacity(o.graph().order());
        let members: Vec<usize> = (0..c).filter(|b| mask >> b & 1 == 1).map(|b| o.center()[b]).collect();
        members.iter().for_each(|&v| l.insert(v));
        let ys: Vec<usize> = o.neighborhood(&l).ones().collect();
        if find_x_matching(&members, &ys, &o.edges_from(&l)).is_matching() {
            good += 1;
        }
    }
    row.computed(good)
}

/// Counts random families on which both sides of the double count agree.
fn double_count_row(seed: u64) -> ReproRow {
    let row = ReproRow::new(
        "double count".to_string(),
        Group::DoubleCount,
        DOUBLE_COUNT_FAMILIES as Int,
        "substring-double-count",
        Method::Oracle,
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut good: Int = 0;
    for i in 0..DOUBLE_COUNT_FAMILIES {
        let n = [5u32, 6, 7][i % 3];
        let k = [2u32, 3][i % 2];
        let result = enumerate_k_subsets(n, k).and_then(|all| {
            let family: Vec<KSubset> = all.into_iter().filter(|_| rng.gen_bool(0.5)).collect();
            double_count_identity(n, k, &family)
        });
        match result {
            Ok(true) => good += 1,
            Ok(false) => {}
            Err(e) => return row.failed(e.to_string()),
        }
    }
    row.computed(good)
}

/// 0 when every row matches or is an optional skip, 1 on any mismatch,
/// 3 when a mandatory row ran out of budget.
pub fn exit_code(rows: &[ReproRow]) -> i32 {
    if rows.iter().any(|r| r.status == Status::Mismatch) {
        crate::EXIT_MISMATCH
    } else if rows.iter().any(|r| r.mandatory && r.status == Status::SkippedBudget) {
        crate::EXIT_BUDGET
    } else {
        crate::EXIT_OK
    }
}

pub fn render_json(rows: &[ReproRow]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
    s.push('\n');
    s
}

pub fn render_table(rows: &[ReproRow]) -> String {
    let header = ["instance", "claimed", "source", "computed", "method", "status"];
    let cells: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            let status = match (&r.note, r.mandatory) {
                (Some(note), _) => format!("{} ({note})", r.status.name()),
                (None, false) => format!("{} (stretch)", r.status.name()),
                (None, true) => r.status.name().to_string(),
            };
            [
                r.label.clone(),
                r.claimed.to_string(),
                r.source.clone(),
                r.computed.map_or_else(|| "-".to_string(), |v| v.to_string()),
                r.method.name().to_string(),
                status,
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, cols: &[&str]| {
        let mut parts = Vec::with_capacity(cols.len());
        for (i, c) in cols.iter().enumerate() {
            parts.push(format!("{c:<w$}", w = widths[i]));
        }
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(&mut out, &header);
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    line(&mut out, &rule.iter().map(String::as_str).collect::<Vec<_>>());
    for row in &cells {
        line(&mut out, &row.iter().map(String::as_str).collect::<Vec<_>>());
    }
    let matched = rows.iter().filter(|r| r.status == Status::Match).count();
    let _ = writeln!(out, "{matched}/{} rows match", rows.len());
    out
}
