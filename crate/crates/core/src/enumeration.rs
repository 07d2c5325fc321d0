//! Exhaustive search over labeled graphs on at most 8 vertices.
//!
//! Pair slots are decided in graph6 column order. A branch that adds an
//! edge creating K4^- is cut: every supergraph still contains K4^-, so no
//! saturated graph is lost. Leaves are therefore exactly the labeled
//! K4^--free graphs.
//!
//! The first `prefix_len` slots split the space into independent
//! [`SearchTask`]s; per-task results are merged in task order, so reports
//! do not depend on the number of workers.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{classes_of, classes_of_closed_set, graph6_of_code, graph_of_code};
use crate::constructions::bipartite_threshold;
use crate::error::{usage, Result};
use crate::graph::{column_pairs, pair_count, VertexSet};
use crate::saturation::{adj_creates_on_add, adj_is_saturated_free, naive_is_saturated, odd_cycle_excess};

pub const MAX_ENUMERATION_N: usize = 8;
pub const DEFAULT_CERT_CAP: usize = 100;

/// Which saturation checker decides the leaves.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckerMode {
    #[default]
    Fast,
    Naive,
    Both,
}

impl CheckerMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckerMode::Fast => "fast",
            CheckerMode::Naive => "naive",
            CheckerMode::Both => "both",
        }
    }
}

impl std::str::FromStr for CheckerMode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "fast" => Ok(CheckerMode::Fast),
            "naive" => Ok(CheckerMode::Naive),
            "both" => Ok(CheckerMode::Both),
            other => Err(format!("unknown checker mode {other:?}")),
        }
    }
}

/// A subtree of the search: the first `prefix.len()` pair slots are fixed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SearchTask {
    pub n: usize,
    /// `prefix[k]` is whether slot `k` (column order) holds an edge.
    pub prefix: Vec<bool>,
}

/// Tasks covering the space plus the leaves cut off while building them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaskPlan {
    pub tasks: Vec<SearchTask>,
    pub pruned_leaves: u64,
}

pub fn partition_tasks(n: usize, prefix_len: usize) -> Result<TaskPlan> {
    check_n(n)?;
    let total = pair_count(n);
    if prefix_len > total {
        return Err(usage(format!(
            "prefix length {prefix_len} exceeds the {total} pair slots of n={n}"
        )));
    }
    let slots: Vec<(usize, usize)> = column_pairs(n).collect();
    let mut plan = TaskPlan { tasks: Vec::new(), pruned_leaves: 0 };
    let mut adj = [0u64; MAX_ENUMERATION_N];
    let mut prefix = Vec::with_capacity(prefix_len);
    split(&slots, total, prefix_len, &mut adj, &mut prefix, n, &mut plan);
    Ok(plan)
}

fn split(
    slots: &[(usize, usize)],
    total: usize,
    prefix_len: usize,
    adj: &mut [u64; MAX_ENUMERATION_N],
    prefix: &mut Vec<bool>,
    n: usize,
    plan: &mut TaskPlan,
) {
    let k = prefix.len();
    if k == prefix_len {
        plan.tasks.push(SearchTask { n, prefix: prefix.clone() });
        return;
    }
    prefix.push(false);
    split(slots, total, prefix_len, adj, prefix, n, plan);
    prefix.pop();

    let (i, j) = slots[k];
    if adj_creates_on_add(&adj[..n], i, j) {
        plan.pruned_leaves += 1u64 << (total - k - 1);
        return;
    }
    adj[i] |= 1 << j;
    adj[j] |= 1 << i;
    prefix.push(true);
    split(slots, total, prefix_len, adj, prefix, n, plan);
    prefix.pop();
    adj[i] &= !(1 << j);
    adj[j] &= !(1 << i);
}

/// Leaf and prune counts of a search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// K4^--free labeled graphs visited.
    pub leaves: u64,
    /// Leaves below cut branches (all contain K4^-).
    pub pruned_leaves: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: SearchStats) {
        self.leaves += other.leaves;
        self.pruned_leaves += other.pruned_leaves;
    }
}

/// Receives every leaf of the search.
pub(crate) trait LeafVisitor: Send {
    /// `code` is the graph's code (see [`crate::canon`]), `edges` its size.
    fn visit(&mut self, adj: &[u64], code: u64, edges: usize);
    fn merge(&mut self, later: Self);
}

struct Search<'a, V> {
    n: usize,
    total: usize,
    slots: &'a [(usize, usize)],
    adj: [u64; MAX_ENUMERATION_N],
    stats: SearchStats,
    visitor: V,
}

impl<V: LeafVisitor> Search<'_, V> {
    fn descend(&mut self, k: usize, code: u64, edges: usize) {
        if k == self.total {
            self.stats.leaves += 1;
            self.visitor.visit(&self.adj[..self.n], code, edges);
            return;
        }
        self.descend(k + 1, code, edges);
        let (i, j) = self.slots[k];
        if adj_creates_on_add(&self.adj[..self.n], i, j) {
            self.stats.pruned_leaves += 1u64 << (self.total - k - 1);
            return;
        }
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
        self.descend(k + 1, code | 1u64 << (self.total - 1 - k), edges + 1);
        self.adj[i] &= !(1 << j);
        self.adj[j] &= !(1 << i);
    }
}

pub(crate) fn run_task<V: LeafVisitor>(task: &SearchTask, visitor: V) -> (V, SearchStats) {
    let n = task.n;
    let total = pair_count(n);
    let slots: Vec<(usize, usize)> = column_pairs(n).collect();
    let mut adj = [0u64; MAX_ENUMERATION_N];
    let mut code = 0u64;
    let mut edges = 0;
    for (k, &present) in task.prefix.iter().enumerate() {
        if present {
            let (i, j) = slots[k];
            debug_assert!(!adj_creates_on_add(&adj[..n], i, j), "task prefix contains K4^-");
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
            code |= 1u64 << (total - 1 - k);
            edges += 1;
        }
    }
    let mut search = Search {
        n,
        total,
        slots: &slots,
        adj,
        stats: SearchStats::default(),
        visitor,
    };
    search.descend(task.prefix.len(), code, edges);
    (search.visitor, search.stats)
}

/// Runs every task of `plan` on the current rayon pool and merges the
/// visitors in task order.
pub(crate) fn run_plan<V, F>(plan: &TaskPlan, make: F) -> (V, SearchStats)
where
    V: LeafVisitor,
    F: Fn() -> V + Sync,
{
    let parts: Vec<(V, SearchStats)> = plan
        .tasks
        .par_iter()
        .map(|task| run_task(task, make()))
        .collect();
    let mut stats = SearchStats {
        leaves: 0,
        pruned_leaves: plan.pruned_leaves,
    };
    let mut merged = make();
    for (v, s) in parts {
        merged.merge(v);
        stats.absorb(s);
    }
    (merged, stats)
}

/// Options for [`enumerate_saturated`] and the audits built on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub dedup: bool,
    pub cert_cap: usize,
    /// Worker threads; 0 uses the ambient rayon pool.
    pub workers: usize,
    pub mode: CheckerMode,
    /// Pair slots fixed per task; clamped to the number of slots.
    pub prefix_len: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            dedup: true,
            cert_cap: DEFAULT_CERT_CAP,
            workers: 1,
            mode: CheckerMode::Fast,
            prefix_len: 10,
        }
    }
}

/// Census of one edge count.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeEntry {
    pub labeled_count: u64,
    /// Number of isomorphism classes; `None` when deduplication is off.
    pub unlabeled_count: Option<u64>,
    /// Canonical graph6 per class (ascending, capped) when deduplicating,
    /// otherwise the smallest labeled graph6 strings.
    pub certificates: Vec<String>,
}

/// Every edge count realized by a K4^--saturated graph on `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub checker_mode: CheckerMode,
    pub sizes: BTreeMap<usize, SizeEntry>,
}

impl SpectrumReport {
    pub fn edge_counts(&self) -> Vec<usize> {
        self.sizes.keys().copied().collect()
    }
}

/// Everything learned in one pass over the search space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub report: SpectrumReport,
    pub stats: SearchStats,
    /// Labeled graphs on which the fast and naive checkers disagree
    /// (only in [`CheckerMode::Both`]), graph6.
    pub checker_disagreements: Vec<String>,
    /// Saturated non-bipartite graphs above the bipartite threshold,
    /// canonical graph6 per class.
    pub theorem_a_counterexamples: Vec<String>,
    /// Number of K4^--free non-bipartite graphs whose shortest odd cycle
    /// was checked for the neighbour bound (0 unless requested).
    pub neighbor_bound_checked: u64,
    pub neighbor_bound_violations: Vec<String>,
    /// Saturated non-bipartite graphs checked against
    /// `threshold - (t-1)^2`.
    pub edge_bound_checked: u64,
    /// Canonical graph6 per class.
    pub edge_bound_violations: Vec<String>,
}

#[derive(Default)]
struct AuditVisitor {
    mode: CheckerMode,
    threshold: usize,
    all_free_odd_cycles: bool,
    saturated: BTreeMap<usize, Vec<u64>>,
    disagreements: Vec<u64>,
    theorem_a: Vec<u64>,
    neighbor_checked: u64,
    neighbor_violations: Vec<u64>,
    edge_checked: u64,
    edge_violations: Vec<u64>,
}

impl LeafVisitor for AuditVisitor {
    fn visit(&mut self, adj: &[u64], code: u64, edges: usize) {
        let saturated = match self.mode {
            CheckerMode::Fast => adj_is_saturated_free(adj),
            CheckerMode::Naive => naive_is_saturated(&graph_of_code(adj.len(), code)).saturated,
            CheckerMode::Both => {
                let fast = adj_is_saturated_free(adj);
                let naive = naive_is_saturated(&graph_of_code(adj.len(), code));
                if naive.saturated != fast || !naive.h_free {
                    self.disagreements.push(code);
                }
                fast
            }
        };
        if saturated {
            self.saturated.entry(edges).or_default().push(code);
        }
        if !saturated && !self.all_free_odd_cycles {
            return;
        }
        let Some((t, neighbors_ok)) = odd_cycle_excess(adj) else {
            return;
        };
        if self.all_free_odd_cycles {
            self.neighbor_checked += 1;
            if !neighbors_ok {
                self.neighbor_violations.push(code);
            }
        }
        if saturated {
            if edges > self.threshold {
                self.theorem_a.push(code);
            }
            self.edge_checked += 1;
            let bound = self.threshold as i64 - ((t as i64 - 1) * (t as i64 - 1));
            if edges as i64 > bound {
                self.edge_violations.push(code);
            }
        }
    }

    fn merge(&mut self, later: Self) {
        for (m, mut codes) in later.saturated {
            self.saturated.entry(m).or_default().append(&mut codes);
        }
        self.disagreements.extend(later.disagreements);
        self.theorem_a.extend(later.theorem_a);
        self.neighbor_checked += later.neighbor_checked;
        self.neighbor_violations.extend(later.neighbor_violations);
        self.edge_checked += later.edge_checked;
        self.edge_violations.extend(later.edge_violations);
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ENUMERATION_N {
        return Err(usage(format!(
            "exhaustive enumeration is limited to 1 <= n <= {MAX_ENUMERATION_N}, got {n}"
        )));
    }
    Ok(())
}

fn with_workers<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> Result<T> {
    if workers == 0 {
        return Ok(job());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| usage(format!("cannot start {workers} workers: {e}")))?;
    Ok(pool.install(job))
}

fn canonical_strings(n: usize, codes: &[u64]) -> Vec<String> {
    classes_of(n, codes)
        .into_iter()
        .map(|c| graph6_of_code(n, c))
        .collect()
}

fn labeled_strings(n: usize, codes: &[u64]) -> Vec<String> {
    let mut sorted = codes.to_vec();
    sorted.sort_unstable();
    sorted.into_iter().map(|c| graph6_of_code(n, c)).collect()
}

/// One full pass: saturated census, checker cross-check, Theorem (a)
/// threshold, and (with `check_all_free`) the odd-cycle neighbour bound on
/// every K4^--free non-bipartite graph.
pub fn audit(n: usize, opts: EnumerationOptions, check_all_free: bool) -> Result<AuditReport> {
    check_n(n)?;
    let prefix_len = opts.prefix_len.min(pair_count(n));
    let plan = partition_tasks(n, prefix_len)?;
    let threshold = bipartite_threshold(n) as usize;
    let make = || AuditVisitor {
        mode: opts.mode,
        threshold,
        all_free_odd_cycles: check_all_free,
        ..AuditVisitor::default()
    };
    let (visitor, stats) = with_workers(opts.workers, || run_plan(&plan, make))?;

    let mut sizes = BTreeMap::new();
    for (m, codes) in &visitor.saturated {
        let entry = if opts.dedup {
            let classes = classes_of_closed_set(n, codes);
            SizeEntry {
                labeled_count: codes.len() as u64,
                unlabeled_count: Some(classes.len() as u64),
                certificates: classes
                    .iter()
                    .take(opts.cert_cap)
                    .map(|&c| graph6_of_code(n, c))
                    .collect(),
            }
        } else {
            let mut sorted = codes.clone();
            sorted.sort_unstable();
            sorted.truncate(opts.cert_cap);
            SizeEntry {
                labeled_count: codes.len() as u64,
                unlabeled_count: None,
                certificates: sorted.into_iter().map(|c| graph6_of_code(n, c)).collect(),
            }
        };
        sizes.insert(*m, entry);
    }

    Ok(AuditReport {
        report: SpectrumReport {
            n,
            checker_mode: opts.mode,
            sizes,
        },
        stats,
        checker_disagreements: labeled_strings(n, &visitor.disagreements),
        theorem_a_counterexamples: canonical_strings(n, &visitor.theorem_a),
        neighbor_bound_checked: visitor.neighbor_checked,
        neighbor_bound_violations: canonical_strings(n, &visitor.neighbor_violations),
        edge_bound_checked: visitor.edge_checked,
        edge_bound_violations: canonical_strings(n, &visitor.edge_violations),
    })
}

/// Edge counts of all K4^--saturated graphs on `n <= 8` vertices.
pub fn enumerate_saturated(n: usize, opts: EnumerationOptions) -> Result<SpectrumReport> {
    Ok(audit(n, opts, false)?.report)
}

/// Outcome of checking that saturated non-bipartite graphs stay at or
/// below `⌊(n-1)/2⌋⌈(n-1)/2⌉ + 2` edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremACheck {
    pub n: usize,
    pub threshold: u64,
    pub holds: bool,
    /// Canonical graph6 of each offending class.
    pub counterexamples: Vec<String>,
}

pub fn verify_theorem_a(n: usize, opts: EnumerationOptions) -> Result<TheoremACheck> {
    let audit = audit(n, opts, false)?;
    Ok(theorem_a_from(&audit))
}

pub fn theorem_a_from(audit: &AuditReport) -> TheoremACheck {
    TheoremACheck {
        n: audit.report.n,
        threshold: bipartite_threshold(audit.report.n),
        holds: audit.theorem_a_counterexamples.is_empty(),
        counterexamples: audit.theorem_a_counterexamples.clone(),
    }
}

/// Outcome of the odd-cycle bounds: `e(v, C) <= t` off the cycle on every
/// K4^--free non-bipartite graph, and `e(G) <= threshold - (t-1)^2` on
/// the saturated ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofBoundCheck {
    pub n: usize,
    pub holds: bool,
    pub neighbor_bound_checked: u64,
    pub neighbor_bound_violations: Vec<String>,
    pub edge_bound_checked: u64,
    pub edge_bound_violations: Vec<String>,
}

pub fn verify_proof_bound(n: usize, opts: EnumerationOptions) -> Result<ProofBoundCheck> {
    let audit = audit(n, opts, true)?;
    Ok(proof_bound_from(&audit))
}

pub fn proof_bound_from(audit: &AuditReport) -> ProofBoundCheck {
    ProofBoundCheck {
        n: audit.report.n,
        holds: audit.neighbor_bound_violations.is_empty() && audit.edge_bound_violations.is_empty(),
        neighbor_bound_checked: audit.neighbor_bound_checked,
        neighbor_bound_violations: audit.neighbor_bound_violations.clone(),
        edge_bound_checked: audit.edge_bound_checked,
        edge_bound_violations: audit.edge_bound_violations.clone(),
    }
}

/// `true` if the vertex set spans a diamond; used by prune-soundness tests.
pub fn spans_k4_minus(adj: &[u64], set: VertexSet) -> bool {
    set.iter().any(|u| {
        (VertexSet(adj[u]) & set)
            .iter()
            .any(|v| (VertexSet(adj[u] & adj[v]) & set).len() >= 2)
    })
}
