//! Pruned depth-first search deciding whether K_{m,n} arrows
//! (K_{2,2}, K_{s,s}), and a scan locating the least arrowing n.
//!
//! The DFS assigns red rows for x_0, x_1, ... top-down under three standing
//! constraints that never lose a good coloring up to relabeling:
//!
//! * pairwise row intersections of size at most 1 (red K_{2,2}-freeness is
//!   baked into candidate generation),
//! * nonincreasing row degrees (X-vertices are interchangeable),
//! * canonical Y-labels: fresh columns are always the lowest unused indices,
//!   and a reused column is always the lowest-indexed member of its
//!   membership class (columns lying in exactly the same earlier rows are
//!   interchangeable).
//!
//! Symmetry breaking is partial, not a full canonical-form check; residual
//! isomorphic duplicates cost time, never correctness. On top of that, a
//! branch is cut when the always-on blue check fires (some s-subset of
//! assigned rows already covers at most n - s columns) or when an enabled
//! [`PruneRule`] fires.

use std::collections::BTreeMap;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::combi::for_each_combination;
use crate::coloring::Coloring;
use crate::error::CoreError;
use crate::spec::ProblemSpec;
use crate::yset::YSet;

/// Search rows are tracked in 16-bit membership signatures.
pub const MAX_SEARCH_ROWS: usize = 16;

pub const RULE_MAX_DEGREE: &str = "max_degree";
pub const RULE_UNION_LOOKAHEAD: &str = "union_lookahead";
pub const RULE_PARTIAL_BLUE: &str = "partial_blue";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("red target order {a} is not supported by the row search; only a = 2 (use the CNF path otherwise)")]
    UnsupportedRedTarget { a: usize },

    #[error("{what} = {value} exceeds the search cap {cap}")]
    CapacityExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("budget fields must all be at least 1")]
    InvalidBudget,

    #[error("empty scan range {lo}..={hi}")]
    EmptyRange { lo: usize, hi: usize },

    #[error(transparent)]
    Core(#[from] CoreError),
}

/// Resource limits for one search call.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of DFS nodes (row assignments) across all workers.
    pub max_nodes: u64,
    /// Wall-clock limit in seconds.
    pub max_seconds: u64,
    /// Number of concurrent top-level branches (1 = fully deterministic).
    pub parallel_width: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: u64::MAX,
            max_seconds: u64::MAX,
            parallel_width: 1,
        }
    }
}

impl Budget {
    pub fn with_nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes,
            ..Budget::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    /// Every canonical candidate was exhausted without a good coloring.
    Arrow,
    /// A good coloring exists; the outcome carries a verified witness.
    NotArrow,
    /// The budget ran out first. Never converted into a claim.
    Inconclusive,
}

impl std::fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SearchStatus::Arrow => "Arrow",
            SearchStatus::NotArrow => "NotArrow",
            SearchStatus::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Row assignments performed.
    pub nodes: u64,
    /// Branch cuts per rule name (includes the always-on blue check).
    pub prunes: BTreeMap<&'static str, u64>,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    /// Present exactly when `status == NotArrow`; verified before return.
    pub witness: Option<Coloring>,
    pub stats: SearchStats,
}

/// Optional, individually toggleable branch cuts. Soundness contract: when a
/// rule fires on a partial assignment, no completion of it within the
/// search's state space is a good coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PruneRule {
    /// Cut once any row has degree >= 2s, provided m >= s + 1: the other
    /// rows each meet that row's neighborhood at most once, so s of them
    /// leave s of its columns jointly uncovered.
    MaxDegree,
    /// Cut when some (s-1)-subset of assigned rows covers at most
    /// n - s - cap columns, where cap bounds every future row degree: any
    /// next row extends the union by at most cap, forcing a blue K_{s,s}.
    UnionLookahead,
}

impl PruneRule {
    pub const DEFAULT: [PruneRule; 2] = [PruneRule::MaxDegree, PruneRule::UnionLookahead];

    pub fn name(self) -> &'static str {
        match self {
            PruneRule::MaxDegree => RULE_MAX_DEGREE,
            PruneRule::UnionLookahead => RULE_UNION_LOOKAHEAD,
        }
    }

    pub fn parse(name: &str) -> Option<PruneRule> {
        match name {
            RULE_MAX_DEGREE => Some(PruneRule::MaxDegree),
            RULE_UNION_LOOKAHEAD => Some(PruneRule::UnionLookahead),
            _ => None,
        }
    }

    /// Reference predicate: does the rule fire on this partial assignment?
    ///
    /// `future_degree_cap` must bound the degree of every row a completion
    /// may still add. The engine's incremental checks agree with this
    /// predicate; the soundness suite re-evaluates it on traced prunes.
    pub fn fires(self, spec: &ProblemSpec, rows: &[YSet], future_degree_cap: usize) -> bool {
        match self {
            PruneRule::MaxDegree => {
                spec.m >= spec.s + 1 && rows.iter().any(|r| r.len() >= 2 * spec.s)
            }
            PruneRule::UnionLookahead => {
                let count = rows.len();
                if count >= spec.m || spec.m < spec.s || count + 1 < spec.s {
                    return false;
                }
                let Some(threshold) = spec.n.checked_sub(spec.s + future_degree_cap) else {
                    return false;
                };
                min_subset_union(rows, spec.s - 1).is_some_and(|v| v <= threshold)
            }
        }
    }
}

/// The always-on blue check: some s-subset of assigned rows covers at most
/// n - s columns, so every completion contains a blue K_{s,s}.
pub fn partial_blue_fires(spec: &ProblemSpec, rows: &[YSet]) -> bool {
    if rows.len() < spec.s {
        return false;
    }
    let Some(threshold) = spec.n.checked_sub(spec.s) else {
        return false;
    };
    min_subset_union(rows, spec.s).is_some_and(|v| v <= threshold)
}

fn min_subset_union(rows: &[YSet], k: usize) -> Option<usize> {
    if k > rows.len() {
        return None;
    }
    let mut best: Option<usize> = None;
    for_each_combination(rows.len(), k, |xs| {
        let mut u = YSet::empty();
        for &x in xs {
            u.union_with(&rows[x]);
        }
        let v = u.len();
        if best.is_none_or(|b| v < b) {
            best = Some(v);
        }
        ControlFlow::Continue(())
    });
    best
}

/// Unions of all k-subsets of `rows`, lexicographic. `k == 0` gives the
/// single empty union.
fn subset_unions(rows: &[YSet], k: usize) -> Vec<YSet> {
    let mut out = Vec::new();
    if k > rows.len() {
        return out;
    }
    for_each_combination(rows.len(), k, |xs| {
        let mut u = YSet::empty();
        for &x in xs {
            u.union_with(&rows[x]);
        }
        out.push(u);
        ControlFlow::Continue(())
    });
    out
}

/// A prune fired during the search; exposed so rule soundness can be checked
/// from outside against ground truth.
pub struct PruneEvent<'a> {
    pub rule: &'static str,
    /// Rows assigned at the moment of the cut, the last one included.
    pub rows: &'a [YSet],
    /// Degree bound the engine assumed for every future row.
    pub future_degree_cap: usize,
}

struct Engine {
    spec: ProblemSpec,
    max_degree_on: bool,
    union_lookahead_on: bool,
    max_nodes: u64,
    max_elapsed: Duration,
    start: Instant,
    nodes: AtomicU64,
    stop: AtomicBool,
    out_of_budget: AtomicBool,
    witness: Mutex<Option<Coloring>>,
}

impl Engine {
    fn halt_for_budget(&self) {
        self.out_of_budget.store(true, Ordering::Relaxed);
        self.stop.store(true, Ordering::Relaxed);
    }
}

struct Worker<'a, 'cb> {
    eng: &'a Engine,
    rows: Vec<YSet>,
    degrees: Vec<usize>,
    /// Used columns always form the prefix [0, used).
    used: usize,
    local_nodes: u64,
    prunes: BTreeMap<&'static str, u64>,
    trace: Option<&'cb mut dyn FnMut(PruneEvent<'_>)>,
}

impl<'a, 'cb> Worker<'a, 'cb> {
    fn new(eng: &'a Engine, trace: Option<&'cb mut dyn FnMut(PruneEvent<'_>)>) -> Self {
        Worker {
            eng,
            rows: Vec::with_capacity(eng.spec.m),
            degrees: Vec::with_capacity(eng.spec.m),
            used: 0,
            local_nodes: 0,
            prunes: BTreeMap::new(),
            trace,
        }
    }

    /// Membership classes of used columns w.r.t. the assigned rows: one
    /// entry per distinct signature, carrying its lowest member. Ordered by
    /// that member, which matches first appearance.
    fn classes(&self) -> Vec<(u16, usize)> {
        let mut classes: Vec<(u16, usize)> = Vec::new();
        for y in 0..self.used {
            let mut sig = 0u16;
            for (i, r) in self.rows.iter().enumerate() {
                if r.contains(y) {
                    sig |= 1 << i;
                }
            }
            debug_assert!(sig != 0, "used column {y} lies in no row");
            if !classes.iter().any(|&(s, _)| s == sig) {
                classes.push((sig, y));
            }
        }
        classes
    }

    fn dfs(&mut self) -> ControlFlow<()> {
        let level = self.rows.len();
        let spec = self.eng.spec;
        let s = spec.s;
        // Per-level caches for the incremental blue checks: unions of
        // (s-1)- and (s-2)-subsets of the rows assigned so far.
        let olds_s1 = subset_unions(&self.rows, s - 1);
        let olds_s2 = if s >= 2 {
            subset_unions(&self.rows, s - 2)
        } else {
            Vec::new()
        };
        let classes = self.classes();
        let cap = if level == 0 {
            spec.n
        } else {
            self.degrees[level - 1].min(spec.n)
        };
        let mut picked: Vec<usize> = Vec::new();
        for d in (0..=cap).rev() {
            self.gen(&classes, 0, 0, &mut picked, d, &olds_s1, &olds_s2)?;
            debug_assert!(picked.is_empty());
        }
        ControlFlow::Continue(())
    }

    /// Enumerates candidate rows of degree `d`: a set of reused columns (at
    /// most one per class, classes pairwise row-disjoint) padded with fresh
    /// columns. Take-before-skip, so column-reuse-heavy candidates come
    /// first.
    #[allow(clippy::too_many_arguments)]
    fn gen(
        &mut self,
        classes: &[(u16, usize)],
        k: usize,
        picked_sigs: u16,
        picked: &mut Vec<usize>,
        d: usize,
        olds_s1: &[YSet],
        olds_s2: &[YSet],
    ) -> ControlFlow<()> {
        if picked.len() == d || k == classes.len() {
            let fresh = d - picked.len();
            if self.used + fresh > self.eng.spec.n {
                return ControlFlow::Continue(());
            }
            let mut row = YSet::empty();
            for &y in picked.iter() {
                row.insert(y);
            }
            for y in self.used..self.used + fresh {
                row.insert(y);
            }
            return self.explore(row, d, fresh, olds_s1, olds_s2);
        }
        let (sig, repr) = classes[k];
        if sig & picked_sigs == 0 {
            picked.push(repr);
            self.gen(classes, k + 1, picked_sigs | sig, picked, d, olds_s1, olds_s2)?;
            picked.pop();
        }
        self.gen(classes, k + 1, picked_sigs, picked, d, olds_s1, olds_s2)
    }

    /// Assigns one candidate row, applies the cuts, and recurses.
    fn explore(
        &mut self,
        row: YSet,
        degree: usize,
        fresh: usize,
        olds_s1: &[YSet],
        olds_s2: &[YSet],
    ) -> ControlFlow<()> {
        if self.eng.stop.load(Ordering::Relaxed) {
            return ControlFlow::Break(());
        }
        let total = self.eng.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if total > self.eng.max_nodes {
            self.eng.halt_for_budget();
            return ControlFlow::Break(());
        }
        self.local_nodes += 1;
        if self.local_nodes & 1023 == 0 && self.eng.start.elapsed() > self.eng.max_elapsed {
            self.eng.halt_for_budget();
            return ControlFlow::Break(());
        }

        self.rows.push(row);
        self.degrees.push(degree);
        self.used += fresh;

        let spec = self.eng.spec;
        let future_cap = {
            let mut cap = degree.min(spec.n);
            if self.eng.max_degree_on && spec.m >= spec.s + 1 {
                cap = cap.min(2 * spec.s - 1);
            }
            cap
        };
        let fired = self.fired_rule(&row, degree, future_cap, olds_s1, olds_s2);
        let result = match fired {
            Some(rule) => {
                *self.prunes.entry(rule).or_insert(0) += 1;
                if let Some(tr) = self.trace.as_mut() {
                    tr(PruneEvent {
                        rule,
                        rows: &self.rows,
                        future_degree_cap: future_cap,
                    });
                }
                ControlFlow::Continue(())
            }
            None => {
                if self.rows.len() == spec.m {
                    self.record_witness();
                    ControlFlow::Break(())
                } else {
                    self.dfs()
                }
            }
        };

        self.rows.pop();
        self.degrees.pop();
        self.used -= fresh;
        result
    }

    fn fired_rule(
        &self,
        row: &YSet,
        degree: usize,
        future_cap: usize,
        olds_s1: &[YSet],
        olds_s2: &[YSet],
    ) -> Option<&'static str> {
        let spec = self.eng.spec;
        let (m, n, s) = (spec.m, spec.n, spec.s);
        let count = self.rows.len();

        if self.eng.max_degree_on && m >= s + 1 && degree >= 2 * s {
            return Some(RULE_MAX_DEGREE);
        }

        // Blue check over s-subsets containing the new row; subsets without
        // it were checked when their own last row was assigned.
        if count >= s {
            if let Some(threshold) = n.checked_sub(s) {
                for u in olds_s1 {
                    if u.union(row).len() <= threshold {
                        return Some(RULE_PARTIAL_BLUE);
                    }
                }
            }
        }

        // Lookahead over all (s-1)-subsets: the cap shrinks as degrees
        // descend, so subsets not containing the new row need rechecking.
        if self.eng.union_lookahead_on && count < m && m >= s && count + 1 >= s {
            if let Some(threshold) = n.checked_sub(s + future_cap) {
                for u in olds_s1 {
                    if u.len() <= threshold {
                        return Some(RULE_UNION_LOOKAHEAD);
                    }
                }
                for u in olds_s2 {
                    if u.union(row).len() <= threshold {
                        return Some(RULE_UNION_LOOKAHEAD);
                    }
                }
            }
        }
        None
    }

    fn record_witness(&self) {
        let spec = self.eng.spec;
        let coloring = Coloring::from_rows(spec.m, spec.n, self.rows.clone())
            .expect("search rows stay within [0, n)");
        let report = coloring
            .verify(&spec)
            .expect("witness dimensions match the spec");
        assert!(
            report.is_good(),
            "internal error: search emitted a non-good witness for {spec}"
        );
        let mut slot = self.eng.witness.lock().unwrap();
        if slot.is_none() {
            *slot = Some(coloring);
        }
        self.eng.stop.store(true, Ordering::Relaxed);
    }
}

fn validate(spec: &ProblemSpec, budget: &Budget) -> Result<(), SearchError> {
    ProblemSpec::new(spec.m, spec.n, spec.a, spec.s)?;
    if spec.a != 2 {
        return Err(SearchError::UnsupportedRedTarget { a: spec.a });
    }
    if spec.m > MAX_SEARCH_ROWS {
        return Err(SearchError::CapacityExceeded {
            what: "m",
            value: spec.m,
            cap: MAX_SEARCH_ROWS,
        });
    }
    if budget.max_nodes == 0 || budget.max_seconds == 0 || budget.parallel_width == 0 {
        return Err(SearchError::InvalidBudget);
    }
    Ok(())
}

/// Decides K_{m,n} -> (K_{2,2}, K_{s,s}) by exhaustive pruned search.
///
/// Returns `NotArrow` with a verified witness, `Arrow` after exhausting all
/// canonical candidates, or `Inconclusive` when the budget ran out. With
/// `parallel_width == 1` the outcome, witness, and statistics are identical
/// across runs; with wider budgets the status is still order-independent
/// but the returned witness may be any of the good colorings.
pub fn decide_arrow(
    spec: ProblemSpec,
    budget: &Budget,
    rules: &[PruneRule],
) -> Result<SearchOutcome, SearchError> {
    decide_arrow_inner(spec, budget, rules, None)
}

/// [`decide_arrow`] with a prune observer; runs sequentially regardless of
/// the budget's parallel width. Intended for diagnostics and the rule
/// soundness suite.
pub fn decide_arrow_with_trace(
    spec: ProblemSpec,
    budget: &Budget,
    rules: &[PruneRule],
    observer: &mut dyn FnMut(PruneEvent<'_>),
) -> Result<SearchOutcome, SearchError> {
    decide_arrow_inner(spec, budget, rules, Some(observer))
}

fn decide_arrow_inner(
    spec: ProblemSpec,
    budget: &Budget,
    rules: &[PruneRule],
    trace: Option<&mut dyn FnMut(PruneEvent<'_>)>,
) -> Result<SearchOutcome, SearchError> {
    validate(&spec, budget)?;
    let eng = Engine {
        spec,
        max_degree_on: rules.contains(&PruneRule::MaxDegree),
        union_lookahead_on: rules.contains(&PruneRule::UnionLookahead),
        max_nodes: budget.max_nodes,
        max_elapsed: Duration::from_secs(budget.max_seconds),
        start: Instant::now(),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        out_of_budget: AtomicBool::new(false),
        witness: Mutex::new(None),
    };

    let mut prunes: BTreeMap<&'static str, u64> = BTreeMap::new();
    if budget.parallel_width == 1 || trace.is_some() {
        let mut worker = Worker::new(&eng, trace);
        let _ = worker.dfs();
        prunes = worker.prunes;
    } else {
        // Split at the first row only: its candidates are exactly one fresh
        // row per degree, so each degree owns a disjoint subtree.
        let olds_s1 = subset_unions(&[], spec.s - 1);
        let olds_s2 = if spec.s >= 2 {
            subset_unions(&[], spec.s - 2)
        } else {
            Vec::new()
        };
        let degrees: Vec<usize> = (0..=spec.n).rev().collect();
        let merged: Mutex<BTreeMap<&'static str, u64>> = Mutex::new(BTreeMap::new());
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(budget.parallel_width)
            .build()
            .expect("thread pool");
        pool.install(|| {
            degrees.par_iter().for_each(|&d| {
                if eng.stop.load(Ordering::Relaxed) {
                    return;
                }
                let mut worker = Worker::new(&eng, None);
                let row = YSet::full(d);
                let _ = worker.explore(row, d, d, &olds_s1, &olds_s2);
                let mut sink = merged.lock().unwrap();
                for (k, v) in worker.prunes {
                    *sink.entry(k).or_insert(0) += v;
                }
            });
        });
        prunes = merged.into_inner().unwrap();
    }

    let witness = eng.witness.into_inner().unwrap();
    let status = if witness.is_some() {
        SearchStatus::NotArrow
    } else if eng.out_of_budget.load(Ordering::Relaxed) {
        SearchStatus::Inconclusive
    } else {
        SearchStatus::Arrow
    };
    Ok(SearchOutcome {
        status,
        witness,
        stats: SearchStats {
            nodes: eng.nodes.load(Ordering::Relaxed),
            prunes,
            elapsed: eng.start.elapsed(),
        },
    })
}

/// One scanned host size and its outcome.
#[derive(Clone, Debug)]
pub struct ScanCell {
    pub n: usize,
    pub outcome: SearchOutcome,
}

/// What the scanned range proves about the least arrowing n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanInference {
    /// Every smaller scanned n is NotArrow and this n arrows.
    Exact(usize),
    /// No scanned n arrows.
    NoArrowInRange,
    /// An Inconclusive cell blocks the inference; the value (if it exists)
    /// lies at or above `first_undecided`.
    Bracket {
        first_undecided: usize,
        first_arrow: Option<usize>,
    },
}

#[derive(Clone, Debug)]
pub struct ScanResult {
    pub m: usize,
    pub a: usize,
    pub s: usize,
    pub cells: Vec<ScanCell>,
    pub inference: ScanInference,
}

/// Runs [`decide_arrow`] for every n in `n_lo..=n_hi` ascending and infers
/// the least arrowing n where the outcomes allow it.
pub fn brm_scan(
    m: usize,
    a: usize,
    s: usize,
    n_lo: usize,
    n_hi: usize,
    budget: &Budget,
    rules: &[PruneRule],
) -> Result<ScanResult, SearchError> {
    if n_lo > n_hi || n_lo == 0 {
        return Err(SearchError::EmptyRange { lo: n_lo, hi: n_hi });
    }
    let mut cells = Vec::with_capacity(n_hi - n_lo + 1);
    for n in n_lo..=n_hi {
        let spec = ProblemSpec::new(m, n, a, s)?;
        let outcome = decide_arrow(spec, budget, rules)?;
        cells.push(ScanCell { n, outcome });
    }
    let mut inference = ScanInference::NoArrowInRange;
    for cell in &cells {
        match cell.outcome.status {
            SearchStatus::NotArrow => continue,
            SearchStatus::Arrow => {
                inference = ScanInference::Exact(cell.n);
                break;
            }
            SearchStatus::Inconclusive => {
                let first_arrow = cells
                    .iter()
                    .find(|c| c.outcome.status == SearchStatus::Arrow)
                    .map(|c| c.n);
                inference = ScanInference::Bracket {
                    first_undecided: cell.n,
                    first_arrow,
                };
                break;
            }
        }
    }
    Ok(ScanResult {
        m,
        a,
        s,
        cells,
        inference,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(m: usize, n: usize, a: usize, s: usize) -> ProblemSpec {
        ProblemSpec::new(m, n, a, s).unwrap()
    }

    #[test]
    fn single_row_hosts_never_arrow() {
        let out = decide_arrow(spec(1, 10, 2, 6), &Budget::default(), &PruneRule::DEFAULT).unwrap();
        assert_eq!(out.status, SearchStatus::NotArrow);
        let w = out.witness.unwrap();
        assert!(w.verify(&spec(1, 10, 2, 6)).unwrap().is_good());
    }

    #[test]
    fn rejects_red_targets_other_than_two() {
        for a in [1, 3, 4] {
            let err = decide_arrow(spec(3, 3, a, 2), &Budget::default(), &[]).unwrap_err();
            assert_eq!(err, SearchError::UnsupportedRedTarget { a });
        }
        let err = decide_arrow(spec(17, 3, 2, 2), &Budget::default(), &[]).unwrap_err();
        assert!(matches!(err, SearchError::CapacityExceeded { what: "m", .. }));
    }

    #[test]
    fn tiny_arrowing_host_is_exhausted() {
        // K_{2,2} -> (K_{2,2}, K_{1,1}): a good coloring would need all
        // edges red (no blue K_{1,1}) yet no red K_{2,2}.
        let out = decide_arrow(spec(2, 2, 2, 1), &Budget::default(), &PruneRule::DEFAULT).unwrap();
        assert_eq!(out.status, SearchStatus::Arrow);
        assert!(out.witness.is_none());
        assert!(out.stats.prunes.contains_key(RULE_PARTIAL_BLUE));
    }

    #[test]
    fn node_budget_yields_inconclusive_not_a_claim() {
        let tight = Budget {
            max_nodes: 1,
            ..Budget::default()
        };
        let out = decide_arrow(spec(2, 2, 2, 1), &tight, &PruneRule::DEFAULT).unwrap();
        assert_eq!(out.status, SearchStatus::Inconclusive);
        assert!(out.witness.is_none());
    }

    #[test]
    fn sequential_runs_are_identical() {
        let s = spec(3, 5, 2, 2);
        let a = decide_arrow(s, &Budget::default(), &PruneRule::DEFAULT).unwrap();
        let b = decide_arrow(s, &Budget::default(), &PruneRule::DEFAULT).unwrap();
        assert_eq!(a.status, b.status);
        assert_eq!(a.stats.nodes, b.stats.nodes);
        assert_eq!(a.stats.prunes, b.stats.prunes);
        match (a.witness, b.witness) {
            (Some(wa), Some(wb)) => assert_eq!(wa.rows(), wb.rows()),
            (None, None) => {}
            _ => panic!("witness presence differed between runs"),
        }
    }

    #[test]
    fn parallel_status_matches_sequential() {
        for (m, n, s) in [(3, 4, 2), (2, 4, 2), (4, 4, 3), (3, 5, 3)] {
            let sp = spec(m, n, 2, s);
            let seq = decide_arrow(sp, &Budget::default(), &PruneRule::DEFAULT).unwrap();
            let par = decide_arrow(
                sp,
                &Budget {
                    parallel_width: 4,
                    ..Budget::default()
                },
                &PruneRule::DEFAULT,
            )
            .unwrap();
            assert_eq!(seq.status, par.status, "m={m} n={n} s={s}");
            if let Some(w) = par.witness {
                assert!(w.verify(&sp).unwrap().is_good());
            }
        }
    }

    #[test]
    fn traced_prunes_reproduce_under_the_reference_predicates() {
        let mut checked = 0u64;
        let sp = spec(3, 4, 2, 2);
        let mut observer = |ev: PruneEvent<'_>| {
            let ok = match ev.rule {
                RULE_PARTIAL_BLUE => partial_blue_fires(&sp, ev.rows),
                RULE_MAX_DEGREE => PruneRule::MaxDegree.fires(&sp, ev.rows, ev.future_degree_cap),
                RULE_UNION_LOOKAHEAD => {
                    PruneRule::UnionLookahead.fires(&sp, ev.rows, ev.future_degree_cap)
                }
                other => panic!("unknown rule {other}"),
            };
            assert!(ok, "engine cut via {} but the predicate disagrees", ev.rule);
            checked += 1;
        };
        decide_arrow_with_trace(sp, &Budget::default(), &PruneRule::DEFAULT, &mut observer)
            .unwrap();
        assert!(checked > 0, "expected at least one prune on this host");
    }

    #[test]
    fn scan_with_no_arrow_reports_the_range_clean() {
        // Two rows can always split the columns: red and blue C4 both need
        // two X-vertices sharing two columns of their color.
        let r = brm_scan(2, 2, 2, 1, 6, &Budget::default(), &PruneRule::DEFAULT).unwrap();
        assert_eq!(r.inference, ScanInference::NoArrowInRange);
        assert!(r
            .cells
            .iter()
            .all(|c| c.outcome.status == SearchStatus::NotArrow));
    }

    #[test]
    fn scan_brackets_on_budget_exhaustion() {
        let tight = Budget {
            max_nodes: 2,
            ..Budget::default()
        };
        let r = brm_scan(2, 2, 2, 1, 3, &tight, &PruneRule::DEFAULT).unwrap();
        match r.inference {
            ScanInference::Bracket { .. } | ScanInference::NoArrowInRange => {}
            other => panic!("unexpected inference {other:?}"),
        }
    }
}
