//! Exhaustive search for valid labelings over the full label space.
//!
//! The searcher walks edge labels depth-first in the graph's normalized edge
//! order, trying values in ascending order (-k..=-1, then 1..=k), so witness
//! enumeration is lexicographic and the first witness found is the canonical
//! (smallest) one. Pruning rules are individually toggleable so that a naive
//! no-pruning run can serve as the reference for soundness sweeps; they are
//! all off by default.
//!
//! Work may be split across workers by assignment prefix. The reported
//! decision (and the witness, which is always the lexicographically smallest
//! one of the first productive prefix) does not depend on the worker count as
//! long as no budget cut occurs. A budget cut is never reported as
//! exhaustion: the outcome is an explicit `Undecided`.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use crate::graph::Graph;
use crate::labeling::{verify, Labeling, LabelingKind};

/// Individually toggleable pruning rules.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Pruning {
    /// Running vertex-sum bounds: completed vertices must satisfy the kind's
    /// vertex condition (the first completed vertex fixes K for the
    /// uniform-magnitude kind), and partially assigned vertices must still be
    /// able to reach an allowed value.
    pub vertex_bounds: bool,
    /// Partial edge tallies may not exceed the cap implied by the balance
    /// conditions.
    pub cardinality_bounds: bool,
    /// Fix the first edge's label positive; sound for existence because every
    /// definition is invariant under global negation.
    pub sign_symmetry: bool,
}

impl Pruning {
    pub fn none() -> Self {
        Pruning::default()
    }

    pub fn all() -> Self {
        Pruning { vertex_bounds: true, cardinality_bounds: true, sign_symmetry: true }
    }
}

/// Search parameters. `limit` only affects [`enumerate`]; `budget` caps the
/// number of counted events (assignments evaluated plus subtrees pruned).
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub kind: LabelingKind,
    pub canonical: bool,
    pub limit: Option<usize>,
    pub budget: Option<u64>,
    pub workers: usize,
    pub pruning: Pruning,
}

impl SearchConfig {
    pub fn new(kind: LabelingKind) -> Self {
        SearchConfig {
            kind,
            canonical: false,
            limit: None,
            budget: None,
            workers: 1,
            pruning: Pruning::none(),
        }
    }

    pub fn with_pruning(mut self, pruning: Pruning) -> Self {
        self.pruning = pruning;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = Some(budget);
        self
    }
}

/// The three possible answers. `Exhausted` is only ever reported after the
/// whole (symmetry-reduced) space was covered; a budget cut yields
/// `Undecided`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Found(Box<Labeling>),
    Exhausted,
    Undecided,
}

#[derive(Debug, Clone, Default)]
pub struct SearchStats {
    /// Complete assignments evaluated.
    pub assignments: u64,
    /// Subtrees cut by a pruning rule.
    pub prunes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub decision: Decision,
    pub stats: SearchStats,
}

/// Result of [`enumerate`]: witnesses in lexicographic order. `complete` is
/// false only when a budget cut may have hidden further witnesses.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub witnesses: Vec<Labeling>,
    pub complete: bool,
    pub stats: SearchStats,
}

/// Decides whether `g` admits a valid labeling of the configured kind.
pub fn decide(g: &Graph, cfg: &SearchConfig) -> SearchOutcome {
    let run = run_search(g, cfg, 1);
    let decision = match run.witnesses.into_iter().next() {
        Some(w) => Decision::Found(Box::new(w)),
        None if run.complete => Decision::Exhausted,
        None => Decision::Undecided,
    };
    SearchOutcome { decision, stats: run.stats }
}

/// [`decide`] with the sign-symmetry reduction forced on, halving the space.
pub fn decide_with_symmetry(g: &Graph, cfg: &SearchConfig) -> SearchOutcome {
    let mut cfg = cfg.clone();
    cfg.pruning.sign_symmetry = true;
    decide(g, &cfg)
}

/// Enumerates valid labelings in lexicographic order, up to `cfg.limit`.
pub fn enumerate(g: &Graph, cfg: &SearchConfig) -> Enumeration {
    run_search(g, cfg, cfg.limit.unwrap_or(usize::MAX))
}

const EVENT_BATCH: u64 = 64;

struct Control {
    budget: Option<u64>,
    events: AtomicU64,
    stop: AtomicBool,
    /// Smallest prefix index that reached the limit; larger prefixes may
    /// abort once it is set (single-witness searches only).
    found_at: AtomicUsize,
}

impl Control {
    fn new(budget: Option<u64>) -> Self {
        Control {
            budget,
            events: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            found_at: AtomicUsize::new(usize::MAX),
        }
    }

    /// Flushes a batch of counted events; returns true when the budget is
    /// gone.
    fn flush(&self, n: u64) -> bool {
        let total = self.events.fetch_add(n, Ordering::Relaxed) + n;
        if let Some(budget) = self.budget {
            if total > budget {
                self.stop.store(true, Ordering::Relaxed);
            }
        }
        self.stop.load(Ordering::Relaxed)
    }
}

enum DfsStatus {
    Continue,
    LimitReached,
    Aborted,
}

struct Task<'a> {
    ctl: &'a Control,
    prefix_index: usize,
    /// Abort when a lower prefix already produced the single witness.
    cancel_on_found: bool,
    pending: u64,
    aborted_by_budget: bool,
}

impl Task<'_> {
    fn tick(&mut self) -> bool {
        self.pending += 1;
        if self.pending < EVENT_BATCH {
            return false;
        }
        self.check()
    }

    fn check(&mut self) -> bool {
        if self.ctl.flush(self.pending) {
            self.pending = 0;
            self.aborted_by_budget = true;
            return true;
        }
        self.pending = 0;
        self.cancel_on_found && self.ctl.found_at.load(Ordering::Relaxed) < self.prefix_index
    }

    fn finish(&mut self) {
        self.ctl.flush(self.pending);
        self.pending = 0;
    }
}

struct Engine<'g> {
    g: &'g Graph,
    kind: LabelingKind,
    k: i32,
    values: Vec<i32>,
    /// Vertices whose last incident edge is this depth.
    completing: Vec<Vec<usize>>,
    cap: u64,
    pruning: Pruning,

    labels: Vec<i32>,
    vertex_sum: Vec<i32>,
    remaining: Vec<i32>,
    /// Edge tallies by magnitude; index 0 unused.
    pos: Vec<u64>,
    neg: Vec<u64>,
    current_k: Option<i32>,
    k_fixer: Option<usize>,

    assignments: u64,
    prunes: u64,
}

impl<'g> Engine<'g> {
    fn new(g: &'g Graph, kind: LabelingKind, pruning: Pruning) -> Self {
        let k = match kind {
            LabelingKind::HkCordial(k) => {
                assert!(k >= 1, "k must be at least 1");
                k as i32
            }
            _ => 1,
        };
        let values: Vec<i32> = (-k..=-1).chain(1..=k).collect();
        let m = g.edge_count();
        let n = g.vertex_count();
        let mut last_edge = vec![usize::MAX; n];
        let mut remaining = vec![0i32; n];
        for (idx, &(u, v)) in g.edges().iter().enumerate() {
            last_edge[u] = idx;
            last_edge[v] = idx;
            remaining[u] += 1;
            remaining[v] += 1;
        }
        let mut completing = vec![Vec::new(); m];
        for v in 0..n {
            if last_edge[v] != usize::MAX {
                completing[last_edge[v]].push(v);
            }
        }
        let cap = match kind {
            LabelingKind::ZeroMCordial => (m / 2) as u64,
            _ => m.div_ceil(2) as u64,
        };
        Engine {
            g,
            kind,
            k,
            values,
            completing,
            cap,
            pruning,
            labels: vec![0; m],
            vertex_sum: vec![0; n],
            remaining,
            pos: vec![0; k as usize + 1],
            neg: vec![0; k as usize + 1],
            current_k: None,
            k_fixer: None,
            assignments: 0,
            prunes: 0,
        }
    }

    fn fresh(&self) -> Engine<'g> {
        Engine::new(self.g, self.kind, self.pruning)
    }

    /// Isolated vertices never complete through an edge; their induced value
    /// is 0 for every assignment, which the positive-magnitude kinds reject.
    fn isolated_vertices_admissible(&self) -> bool {
        let has_isolated = self.remaining.contains(&0) && self.g.vertex_count() > 0;
        !has_isolated
            || matches!(
                self.kind,
                LabelingKind::ZeroMCordial | LabelingKind::SemiHCordial
            )
    }

    fn place(&mut self, depth: usize, val: i32) -> bool {
        let (u, v) = self.g.edges()[depth];
        self.labels[depth] = val;
        self.vertex_sum[u] += val;
        self.vertex_sum[v] += val;
        self.remaining[u] -= 1;
        self.remaining[v] -= 1;
        let mag = val.unsigned_abs() as usize;
        let tally = if val > 0 {
            self.pos[mag] += 1;
            self.pos[mag]
        } else {
            self.neg[mag] += 1;
            self.neg[mag]
        };

        if self.pruning.cardinality_bounds && tally > self.cap {
            return false;
        }
        if self.pruning.vertex_bounds {
            if !self.partial_ok(u) || !self.partial_ok(v) {
                return false;
            }
            // completing[] lists are ascending, so the lowest-numbered vertex
            // of the earliest completing depth fixes K deterministically
            for i in 0..self.completing[depth].len() {
                let w = self.completing[depth][i];
                if !self.complete_ok(w) {
                    return false;
                }
            }
        }
        true
    }

    fn unplace(&mut self, depth: usize) {
        let (u, v) = self.g.edges()[depth];
        let val = self.labels[depth];
        self.vertex_sum[u] -= val;
        self.vertex_sum[v] -= val;
        self.remaining[u] += 1;
        self.remaining[v] += 1;
        let mag = val.unsigned_abs() as usize;
        if val > 0 {
            self.pos[mag] -= 1;
        } else {
            self.neg[mag] -= 1;
        }
        self.labels[depth] = 0;
    }

    /// Can the partially assigned vertex still end in the kind's range?
    fn partial_ok(&self, x: usize) -> bool {
        let s = self.vertex_sum[x];
        let r = self.remaining[x];
        match self.kind {
            LabelingKind::ZeroMCordial => s.abs() <= r && (s + r) % 2 == 0,
            LabelingKind::SemiHCordial => {
                if s - r > 1 || s + r < -1 {
                    return false;
                }
                // even reachable parity leaves only 0 as a target
                (s + r) % 2 != 0 || s.abs() <= r
            }
            LabelingKind::HCordial => match self.current_k {
                None => true,
                Some(k) => {
                    (s + r - k) % 2 == 0 && (s - r <= k && k <= s + r || s - r <= -k && -k <= s + r)
                }
            },
            LabelingKind::HkCordial(_) => s - self.k * r <= self.k && s + self.k * r >= -self.k,
        }
    }

    /// Exact vertex condition once all incident edges are assigned.
    fn complete_ok(&mut self, w: usize) -> bool {
        let s = self.vertex_sum[w];
        match self.kind {
            LabelingKind::ZeroMCordial => s == 0,
            LabelingKind::SemiHCordial => s.abs() <= 1,
            LabelingKind::HkCordial(_) => s.abs() >= 1 && s.abs() <= self.k,
            LabelingKind::HCordial => {
                if s == 0 {
                    return false;
                }
                match self.current_k {
                    None => {
                        self.current_k = Some(s.abs());
                        self.k_fixer = Some(w);
                        true
                    }
                    Some(k) => s.abs() == k,
                }
            }
        }
    }

    fn leaf_valid(&self) -> bool {
        match self.kind {
            LabelingKind::ZeroMCordial => self.vertex_sum.iter().all(|&s| s == 0),
            LabelingKind::SemiHCordial => {
                if self.vertex_sum.iter().any(|&s| s.abs() > 1) {
                    return false;
                }
                let p = self.vertex_sum.iter().filter(|&&s| s == 1).count();
                let m = self.vertex_sum.iter().filter(|&&s| s == -1).count();
                p.abs_diff(m) <= 1 && self.pos[1].abs_diff(self.neg[1]) <= 1
            }
            LabelingKind::HCordial => {
                let Some(&first) = self.vertex_sum.first() else { return false };
                let k = first.abs();
                if k == 0 || self.vertex_sum.iter().any(|&s| s.abs() != k) {
                    return false;
                }
                let p = self.vertex_sum.iter().filter(|&&s| s == k).count();
                let m = self.vertex_sum.iter().filter(|&&s| s == -k).count();
                p.abs_diff(m) <= 1 && self.pos[1].abs_diff(self.neg[1]) <= 1
            }
            LabelingKind::HkCordial(_) => {
                let k = self.k;
                if self.vertex_sum.iter().any(|&s| s.abs() < 1 || s.abs() > k) {
                    return false;
                }
                let mut vp = vec![0u64; k as usize + 1];
                let mut vn = vec![0u64; k as usize + 1];
                for &s in &self.vertex_sum {
                    if s > 0 {
                        vp[s as usize] += 1;
                    } else {
                        vn[(-s) as usize] += 1;
                    }
                }
                (1..=k as usize).all(|i| {
                    self.pos[i].abs_diff(self.neg[i]) <= 1 && vp[i].abs_diff(vn[i]) <= 1
                })
            }
        }
    }

    fn witness(&self) -> Labeling {
        let labeling = Labeling::new(self.g.clone(), self.labels.clone())
            .expect("search assigns a nonzero label to every edge");
        // witness soundness: a found witness always passes the verifier
        let report = verify(&labeling, self.kind).expect("alphabet respected by construction");
        assert!(report.valid, "search accepted an invalid labeling: {:?}", report.violations);
        labeling
    }

    fn dfs(
        &mut self,
        depth: usize,
        limit: usize,
        out: &mut Vec<Labeling>,
        task: &mut Task<'_>,
    ) -> DfsStatus {
        if depth == self.g.edge_count() {
            self.assignments += 1;
            if task.tick() {
                return DfsStatus::Aborted;
            }
            if self.leaf_valid() {
                out.push(self.witness());
                if out.len() >= limit {
                    return DfsStatus::LimitReached;
                }
            }
            return DfsStatus::Continue;
        }
        let start = if depth == 0 && self.pruning.sign_symmetry {
            self.values.len() / 2
        } else {
            0
        };
        for vi in start..self.values.len() {
            let val = self.values[vi];
            let saved_k = (self.current_k, self.k_fixer);
            let ok = self.place(depth, val);
            let status = if ok {
                self.dfs(depth + 1, limit, out, task)
            } else {
                self.prunes += 1;
                if task.tick() {
                    DfsStatus::Aborted
                } else {
                    DfsStatus::Continue
                }
            };
            self.unplace(depth);
            (self.current_k, self.k_fixer) = saved_k;
            match status {
                DfsStatus::Continue => {}
                done => return done,
            }
        }
        DfsStatus::Continue
    }
}

struct PrefixOutcome {
    witnesses: Vec<Labeling>,
    complete: bool,
    assignments: u64,
    prunes: u64,
}

fn run_prefix(
    template: &Engine<'_>,
    prefix: &[i32],
    prefix_index: usize,
    limit: usize,
    ctl: &Control,
) -> PrefixOutcome {
    let mut engine = template.fresh();
    let mut task = Task {
        ctl,
        prefix_index,
        cancel_on_found: limit == 1,
        pending: 0,
        aborted_by_budget: false,
    };
    let mut witnesses = Vec::new();
    let mut complete = true;

    if task.check() {
        // stopped before starting; nothing of this subtree was covered
        task.finish();
        return PrefixOutcome {
            witnesses,
            complete: false,
            assignments: 0,
            prunes: 0,
        };
    }

    let mut replay_ok = true;
    for (depth, &val) in prefix.iter().enumerate() {
        if !engine.place(depth, val) {
            engine.prunes += 1;
            replay_ok = false;
            break;
        }
    }
    if replay_ok {
        match engine.dfs(prefix.len(), limit, &mut witnesses, &mut task) {
            DfsStatus::Aborted => {
                // coverage lost: either the budget ran out or an earlier
                // prefix already holds the witness
                complete = false;
            }
            DfsStatus::LimitReached => {
                ctl.found_at.fetch_min(prefix_index, Ordering::Relaxed);
            }
            DfsStatus::Continue => {}
        }
    }
    task.finish();
    PrefixOutcome {
        witnesses,
        complete,
        assignments: engine.assignments,
        prunes: engine.prunes,
    }
}

fn prefix_depth(m: usize, value_count: usize, workers: usize) -> usize {
    if workers <= 1 {
        return 0;
    }
    let target = workers * 8;
    let mut depth = 0;
    let mut count = 1usize;
    while depth < m && count < target {
        count = count.saturating_mul(value_count);
        depth += 1;
    }
    depth
}

fn build_prefixes(values: &[i32], depth: usize, sign_symmetry: bool) -> Vec<Vec<i32>> {
    let mut prefixes: Vec<Vec<i32>> = vec![Vec::new()];
    for level in 0..depth {
        let choices: &[i32] = if level == 0 && sign_symmetry {
            &values[values.len() / 2..]
        } else {
            values
        };
        let mut next = Vec::with_capacity(prefixes.len() * choices.len());
        for p in &prefixes {
            for &v in choices {
                let mut q = p.clone();
                q.push(v);
                next.push(q);
            }
        }
        prefixes = next;
    }
    prefixes
}

fn run_search(g: &Graph, cfg: &SearchConfig, limit: usize) -> Enumeration {
    let started = Instant::now();
    let template = Engine::new(g, cfg.kind, cfg.pruning);
    let ctl = Control::new(cfg.budget);
    let mut stats = SearchStats::default();

    if cfg.pruning.vertex_bounds && !template.isolated_vertices_admissible() {
        stats.prunes = 1;
        stats.elapsed = started.elapsed();
        return Enumeration { witnesses: Vec::new(), complete: true, stats };
    }

    let depth = prefix_depth(g.edge_count(), template.values.len(), cfg.workers);
    let outcomes: Vec<PrefixOutcome> = if depth == 0 {
        vec![run_prefix(&template, &[], 0, limit, &ctl)]
    } else {
        let prefixes = build_prefixes(&template.values, depth, cfg.pruning.sign_symmetry);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .expect("worker pool");
        pool.install(|| {
            use rayon::prelude::*;
            prefixes
                .par_iter()
                .enumerate()
                .map(|(i, p)| run_prefix(&template, p, i, limit, &ctl))
                .collect()
        })
    };

    let mut witnesses = Vec::new();
    let mut all_covered = true;
    for outcome in outcomes {
        stats.assignments += outcome.assignments;
        stats.prunes += outcome.prunes;
        if witnesses.len() < limit {
            let take = limit - witnesses.len();
            witnesses.extend(outcome.witnesses.into_iter().take(take));
        }
        all_covered &= outcome.complete;
    }
    // an aborted subtree is harmless once the limit is reached: aborts happen
    // only on budget cuts or because an earlier prefix holds the witness
    let complete = all_covered || witnesses.len() >= limit;
    stats.elapsed = started.elapsed();
    Enumeration { witnesses, complete, stats }
}
