//! Exhaustive search over Cayley tables.
//!
//! Cells are filled depth first, column 0 first (so `x'` is known early)
//! and then row by row. After each assignment every ground instance of a
//! required identity that has become fully determined is evaluated, and a
//! violated instance cuts the branch. Instances that still need an empty
//! cell wait on the first such cell they hit and are only looked at again
//! once that cell is filled.
//!
//! Identities that must fail are checked on complete tables only. With
//! `up_to_iso`, a complete table is kept only if it is its own canonical
//! form, so each isomorphism class is reported once.
//!
//! The tree is split into subproblems at a fixed depth that depends only
//! on the table size, so results are identical for any number of workers.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{
    first_failure, izroupoid_axioms, CompiledIdentity, Counterexample, FiniteGroupoid, Op,
    SatisfactionReport, VarietySpec, satisfies,
};
use crate::term::Identity;

/// Default cap on table size; larger searches need an explicit override.
pub const DEFAULT_MAX_SIZE: usize = 6;

const UNSET: u8 = u8::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("size must be at least 1")]
    ZeroSize,
    #[error("size {size} exceeds the configured maximum {max}")]
    SizeGuard { size: usize, max: usize },
    #[error("identity {0} is both required and forbidden")]
    Contradictory(Identity),
}

/// What to look for: tables of one size satisfying every identity in
/// `must_satisfy` and failing every identity in `must_fail`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchProblem {
    pub size: usize,
    /// Add axioms (I) and (I0) to `must_satisfy`.
    pub in_i: bool,
    pub must_satisfy: Vec<Identity>,
    pub must_fail: Vec<Identity>,
    pub up_to_iso: bool,
    pub limit: Option<usize>,
}

impl SearchProblem {
    /// Implication zroupoids of the given size, no further constraints.
    pub fn izroupoids(size: usize) -> SearchProblem {
        SearchProblem {
            size,
            in_i: true,
            must_satisfy: Vec::new(),
            must_fail: Vec::new(),
            up_to_iso: false,
            limit: None,
        }
    }

    /// Members of `v` of the given size.
    pub fn members(size: usize, v: &VarietySpec) -> SearchProblem {
        SearchProblem {
            size,
            in_i: v.relative_to_i,
            must_satisfy: v.identities.clone(),
            must_fail: Vec::new(),
            up_to_iso: false,
            limit: None,
        }
    }

    pub fn satisfying(mut self, id: Identity) -> SearchProblem {
        self.must_satisfy.push(id);
        self
    }

    pub fn failing(mut self, id: Identity) -> SearchProblem {
        self.must_fail.push(id);
        self
    }

    pub fn up_to_iso(mut self, yes: bool) -> SearchProblem {
        self.up_to_iso = yes;
        self
    }

    pub fn limit(mut self, limit: Option<usize>) -> SearchProblem {
        self.limit = limit;
        self
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Cell assignments tried.
    pub nodes: u64,
    /// Complete tables reached.
    pub tables_tested: u64,
    pub elapsed: Duration,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.tables_tested += other.tables_tested;
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// Sorted by table order.
    pub models: Vec<FiniteGroupoid>,
    /// The whole space of this size was covered.
    pub exhausted: bool,
    pub stats: SearchStats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_size: usize,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_size: DEFAULT_MAX_SIZE,
            jobs: 1,
        }
    }
}

/// Runs searches under a fixed configuration, owning the worker pool.
pub struct Searcher {
    config: SearchConfig,
    pool: Option<rayon::ThreadPool>,
}

impl Default for Searcher {
    fn default() -> Self {
        Searcher::new(SearchConfig::default())
    }
}

impl std::fmt::Debug for Searcher {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Searcher").field("config", &self.config).finish()
    }
}

/// A model of `v` outside `w`, and the identity of `w` it breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub model: FiniteGroupoid,
    pub failure: Counterexample,
}

/// Result of a separation search up to some size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationOutcome {
    pub separation: Option<Separation>,
    /// Largest size fully searched.
    pub searched_up_to: usize,
}

/// Result of checking hypotheses ⇒ conclusions on all small models.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConditionalOutcome {
    Holds { max_size: usize },
    Counterexample {
        model: FiniteGroupoid,
        failure: Counterexample,
    },
}

impl ConditionalOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, ConditionalOutcome::Holds { .. })
    }
}

impl Searcher {
    pub fn new(config: SearchConfig) -> Searcher {
        let pool = (config.jobs > 1).then(|| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(config.jobs)
                .build()
                .expect("worker pool")
        });
        Searcher { config, pool }
    }

    pub fn config(&self) -> SearchConfig {
        self.config
    }

    fn check_size(&self, size: usize) -> Result<(), SearchError> {
        if size == 0 {
            return Err(SearchError::ZeroSize);
        }
        if size > self.config.max_size || size > crate::algebra::MAX_TABLE_SIZE {
            return Err(SearchError::SizeGuard {
                size,
                max: self.config.max_size,
            });
        }
        Ok(())
    }

    /// All tables solving `p`, sorted.
    pub fn enumerate_models(&self, p: &SearchProblem) -> Result<SearchOutcome, SearchError> {
        self.check_size(p.size)?;
        for f in &p.must_fail {
            let f_sorted = f.sorted_sides();
            if p.must_satisfy.iter().any(|s| equivalent(s, f, &f_sorted)) {
                return Err(SearchError::Contradictory(f.clone()));
            }
        }
        let start = Instant::now();
        let root = Engine::new(p);
        let mut stats = SearchStats::default();
        let mut parts: Vec<Part> = Vec::new();
        if let Some(mut root) = root {
            let depth = split_depth(p.size);
            let mut prefixes = Vec::new();
            root.collect_prefixes(0, depth, &mut Vec::new(), &mut prefixes);
            stats.nodes += root.nodes;
            let run = |prefix: &Vec<u8>| {
                let mut e = root.clone();
                e.nodes = 0;
                e.replay(prefix);
                e.dfs(prefix.len());
                Part {
                    models: e.found,
                    stopped: e.stopped,
                    nodes: e.nodes,
                    tables: e.tables,
                }
            };
            parts = match &self.pool {
                Some(pool) => pool.install(|| prefixes.par_iter().map(run).collect()),
                None => prefixes.iter().map(run).collect(),
            };
        }
        let mut models = Vec::new();
        let mut exhausted = true;
        for part in parts {
            stats.absorb(&SearchStats {
                nodes: part.nodes,
                tables_tested: part.tables,
                elapsed: Duration::ZERO,
            });
            exhausted &= !part.stopped;
            models.extend(part.models);
        }
        if let Some(limit) = p.limit {
            if models.len() > limit {
                models.truncate(limit);
                exhausted = false;
            }
        }
        models.sort();
        stats.elapsed = start.elapsed();
        Ok(SearchOutcome {
            models,
            exhausted,
            stats,
        })
    }

    /// Number of size-`n` members of `v`.
    pub fn count_models(&self, size: usize, v: &VarietySpec, up_to_iso: bool) -> Result<usize, SearchError> {
        let p = SearchProblem::members(size, v).up_to_iso(up_to_iso);
        Ok(self.enumerate_models(&p)?.models.len())
    }

    /// The smallest member of `v` outside `w`, least canonical table at that
    /// size, searching sizes `1..=max_size`.
    pub fn find_separating_model(
        &self,
        v: &VarietySpec,
        w: &VarietySpec,
        max_size: usize,
    ) -> Result<SeparationOutcome, SearchError> {
        let mut candidates = w.identities.clone();
        if w.relative_to_i && !v.relative_to_i {
            candidates.splice(0..0, izroupoid_axioms());
        }
        let base = SearchProblem {
            size: 1,
            in_i: v.relative_to_i,
            must_satisfy: v.identities.clone(),
            must_fail: Vec::new(),
            up_to_iso: true,
            limit: None,
        };
        self.smallest_violation(&base, &candidates, max_size)
            .map(|(separation, searched_up_to)| SeparationOutcome {
                separation,
                searched_up_to,
            })
    }

    /// Checks that every implication zroupoid of size at most `max_size`
    /// satisfying all `hypotheses` satisfies all `conclusions`.
    pub fn conditional_identity_check(
        &self,
        hypotheses: &[Identity],
        conclusions: &[Identity],
        max_size: usize,
    ) -> Result<ConditionalOutcome, SearchError> {
        let base = SearchProblem {
            size: 1,
            in_i: true,
            must_satisfy: hypotheses.to_vec(),
            must_fail: Vec::new(),
            up_to_iso: true,
            limit: None,
        };
        Ok(match self.smallest_violation(&base, conclusions, max_size)?.0 {
            None => ConditionalOutcome::Holds { max_size },
            Some(s) => ConditionalOutcome::Counterexample {
                model: s.model,
                failure: s.failure,
            },
        })
    }

    /// Smallest model of `base` (resized) failing at least one of
    /// `targets`; ties go to the least table.
    fn smallest_violation(
        &self,
        base: &SearchProblem,
        targets: &[Identity],
        max_size: usize,
    ) -> Result<(Option<Separation>, usize), SearchError> {
        for size in 1..=max_size {
            self.check_size(size)?;
            let mut best: Option<FiniteGroupoid> = None;
            for t in targets {
                let mut p = base.clone();
                p.size = size;
                p.must_fail = vec![t.clone()];
                if p.must_satisfy.iter().any(|s| equivalent(s, t, &t.sorted_sides())) {
                    continue;
                }
                if let Some(m) = self.enumerate_models(&p)?.models.into_iter().next() {
                    if best.as_ref().is_none_or(|b| m < *b) {
                        best = Some(m);
                    }
                }
            }
            if let Some(model) = best {
                let failure = targets
                    .iter()
                    .find_map(|t| satisfies(&model, t).counterexample)
                    .expect("model fails a target");
                return Ok((Some(Separation { model, failure }), size - 1));
            }
        }
        Ok((None, max_size))
    }
}

fn equivalent(s: &Identity, f: &Identity, f_sorted: &Identity) -> bool {
    match (crate::assoc::canonical_identity(s), crate::assoc::canonical_identity(f)) {
        (Ok(a), Ok(b)) => a == b,
        _ => s.sorted_sides() == *f_sorted,
    }
}

pub fn enumerate_models(p: &SearchProblem) -> Result<SearchOutcome, SearchError> {
    Searcher::default().enumerate_models(p)
}

pub fn count_models(size: usize, v: &VarietySpec, up_to_iso: bool) -> Result<usize, SearchError> {
    Searcher::default().count_models(size, v, up_to_iso)
}

pub fn find_separating_model(
    v: &VarietySpec,
    w: &VarietySpec,
    max_size: usize,
) -> Result<SeparationOutcome, SearchError> {
    Searcher::default().find_separating_model(v, w, max_size)
}

pub fn conditional_identity_check(
    hypotheses: &[Identity],
    conclusions: &[Identity],
    max_size: usize,
) -> Result<ConditionalOutcome, SearchError> {
    Searcher::default().conditional_identity_check(hypotheses, conclusions, max_size)
}

/// Satisfaction of each identity in a table, as a convenience for callers
/// that only hold a list.
pub fn satisfies_all(g: &FiniteGroupoid, ids: &[Identity]) -> SatisfactionReport {
    for id in ids {
        let r = satisfies(g, id);
        if !r.holds {
            return r;
        }
    }
    SatisfactionReport::holds()
}

fn split_depth(size: usize) -> usize {
    if size <= 2 {
        0
    } else {
        size
    }
}

struct Part {
    models: Vec<FiniteGroupoid>,
    stopped: bool,
    nodes: u64,
    tables: u64,
}

#[derive(Clone)]
struct Engine {
    n: usize,
    order: Vec<usize>,
    table: Vec<u8>,
    required: Vec<CompiledIdentity>,
    forbidden: Vec<CompiledIdentity>,
    // Ground instances: identity index and an offset into `inst_vals`.
    inst_ident: Vec<u32>,
    inst_off: Vec<u32>,
    inst_vals: Vec<u8>,
    watch: Vec<Vec<u32>>,
    trail: Vec<u32>,
    stack: Vec<u8>,
    up_to_iso: bool,
    limit: Option<usize>,
    found: Vec<FiniteGroupoid>,
    stopped: bool,
    nodes: u64,
    tables: u64,
}

impl Engine {
    /// Builds the search state and checks instances that need no cells.
    /// `None` when the problem is already refuted at the root.
    fn new(p: &SearchProblem) -> Option<Engine> {
        let n = p.size;
        let mut order: Vec<usize> = (0..n).map(|a| a * n).collect();
        for a in 0..n {
            for b in 1..n {
                order.push(a * n + b);
            }
        }
        let mut ids: Vec<Identity> = if p.in_i { izroupoid_axioms() } else { Vec::new() };
        for id in &p.must_satisfy {
            if !ids.contains(id) {
                ids.push(id.clone());
            }
        }
        let required: Vec<CompiledIdentity> = ids.iter().map(CompiledIdentity::new).collect();
        let forbidden = p.must_fail.iter().map(CompiledIdentity::new).collect();
        let mut e = Engine {
            n,
            order,
            table: vec![UNSET; n * n],
            required,
            forbidden,
            inst_ident: Vec::new(),
            inst_off: Vec::new(),
            inst_vals: Vec::new(),
            watch: vec![Vec::new(); n * n],
            trail: Vec::new(),
            stack: Vec::with_capacity(32),
            up_to_iso: p.up_to_iso,
            limit: p.limit,
            found: Vec::new(),
            stopped: false,
            nodes: 0,
            tables: 0,
        };
        for (k, c) in e.required.iter().enumerate() {
            let mut vals = vec![0u8; c.arity()];
            loop {
                e.inst_ident.push(k as u32);
                e.inst_off.push(e.inst_vals.len() as u32);
                e.inst_vals.extend_from_slice(&vals);
                if !crate::algebra::next_assignment(&mut vals, n) {
                    break;
                }
            }
        }
        for inst in 0..e.inst_ident.len() as u32 {
            match e.eval_instance(inst) {
                Ok(true) => {}
                Ok(false) => return None,
                Err(cell) => e.watch[cell].push(inst),
            }
        }
        Some(e)
    }

    /// Evaluates an instance on the partial table: `Ok(sides agree)` or the
    /// first empty cell it needs.
    fn eval_instance(&mut self, inst: u32) -> Result<bool, usize> {
        let c = &self.required[self.inst_ident[inst as usize] as usize];
        let off = self.inst_off[inst as usize] as usize;
        let vals = &self.inst_vals[off..off + c.arity()];
        let l = eval_partial(&c.lhs, vals, &self.table, self.n, &mut self.stack)?;
        let r = eval_partial(&c.rhs, vals, &self.table, self.n, &mut self.stack)?;
        Ok(l == r)
    }

    /// Assigns `cell` and wakes the instances waiting on it. Returns false
    /// on a violated instance; the trail must be unwound either way.
    fn assign(&mut self, cell: usize, value: u8) -> bool {
        self.table[cell] = value;
        let waiting = std::mem::take(&mut self.watch[cell]);
        let mut ok = true;
        for &inst in &waiting {
            match self.eval_instance(inst) {
                Ok(true) => {}
                Ok(false) => {
                    ok = false;
                    break;
                }
                Err(next) => {
                    self.watch[next].push(inst);
                    self.trail.push(next as u32);
                }
            }
        }
        self.watch[cell] = waiting;
        ok
    }

    fn unwind(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let cell = self.trail.pop().unwrap() as usize;
            self.watch[cell].pop();
        }
    }

    fn collect_prefixes(&mut self, depth: usize, target: usize, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if depth == target || depth == self.order.len() {
            out.push(prefix.clone());
            return;
        }
        let cell = self.order[depth];
        for v in 0..self.n as u8 {
            self.nodes += 1;
            let mark = self.trail.len();
            if self.assign(cell, v) {
                prefix.push(v);
                self.collect_prefixes(depth + 1, target, prefix, out);
                prefix.pop();
            }
            self.unwind(mark);
        }
        self.table[cell] = UNSET;
    }

    fn replay(&mut self, prefix: &[u8]) {
        for (depth, &v) in prefix.iter().enumerate() {
            let ok = self.assign(self.order[depth], v);
            debug_assert!(ok, "prefixes are collected from surviving branches");
        }
    }

    fn dfs(&mut self, depth: usize) {
        if self.stopped {
            return;
        }
        if depth == self.order.len() {
            self.complete();
            return;
        }
        let cell = self.order[depth];
        for v in 0..self.n as u8 {
            self.nodes += 1;
            let mark = self.trail.len();
            if self.assign(cell, v) {
                self.dfs(depth + 1);
            }
            self.unwind(mark);
            if self.stopped {
                break;
            }
        }
        self.table[cell] = UNSET;
    }

    fn complete(&mut self) {
        self.tables += 1;
        let g = FiniteGroupoid::new(self.n, self.table.clone()).expect("complete table");
        if self.forbidden.iter().any(|c| first_failure(&g, c).is_none()) {
            return;
        }
        if self.up_to_iso && !g.is_canonical() {
            return;
        }
        self.found.push(g);
        if self.limit.is_some_and(|l| self.found.len() >= l) {
            self.stopped = true;
        }
    }
}

#[inline]
fn eval_partial(code: &[Op], vals: &[u8], table: &[u8], n: usize, stack: &mut Vec<u8>) -> Result<u8, usize> {
    stack.clear();
    for op in code {
        match *op {
            Op::Zero => stack.push(0),
            Op::Var(s) => stack.push(vals[usize::from(s)]),
            Op::Arrow => {
                let b = stack.pop().unwrap();
                let a = stack.pop().unwrap();
                let cell = usize::from(a) * n + usize::from(b);
                let v = table[cell];
                if v == UNSET {
                    return Err(cell);
                }
                stack.push(v);
            }
        }
    }
    Ok(stack.pop().unwrap())
}

/// Largest size `brute_force` accepts: 3^9 tables, while 4^16 is out of
/// reach.
pub const BRUTE_FORCE_MAX_SIZE: usize = 3;

/// Reference enumerator that tests each of the `n^(n²)` tables directly,
/// sharing nothing with the pruned search but the satisfaction checker.
/// Isomorphism classes are represented by the least relabeling, found by
/// trying every 0-fixing permutation.
pub fn brute_force(p: &SearchProblem) -> Result<Vec<FiniteGroupoid>, SearchError> {
    let n = p.size;
    if n == 0 {
        return Err(SearchError::ZeroSize);
    }
    if n > BRUTE_FORCE_MAX_SIZE {
        return Err(SearchError::SizeGuard {
            size: n,
            max: BRUTE_FORCE_MAX_SIZE,
        });
    }
    let mut required = p.must_satisfy.clone();
    if p.in_i {
        required.extend(izroupoid_axioms());
    }
    let perms = zero_fixing_permutations(n);
    let mut cells = vec![0u8; n * n];
    let mut out = std::collections::BTreeSet::new();
    loop {
        let g = FiniteGroupoid::new(n, cells.clone()).expect("cells in range");
        if required.iter().all(|id| satisfies(&g, id).holds)
            && p.must_fail.iter().all(|id| !satisfies(&g, id).holds)
        {
            if p.up_to_iso {
                out.insert(perms.iter().map(|q| g.relabel(q)).min().expect("identity permutation"));
            } else {
                out.insert(g);
            }
        }
        // Odometer over the cells, last cell fastest.
        let mut k = cells.len();
        loop {
            if k == 0 {
                let mut models: Vec<FiniteGroupoid> = out.into_iter().collect();
                if let Some(limit) = p.limit {
                    models.truncate(limit);
                }
                return Ok(models);
            }
            k -= 1;
            cells[k] += 1;
            if usize::from(cells[k]) < n {
                break;
            }
            cells[k] = 0;
        }
    }
}

fn zero_fixing_permutations(n: usize) -> Vec<Vec<u8>> {
    fn extend(prefix: &mut Vec<u8>, n: usize, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 1..n as u8 {
            if !prefix.contains(&v) {
                prefix.push(v);
                extend(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut vec![0], n, &mut out);
    out
}
