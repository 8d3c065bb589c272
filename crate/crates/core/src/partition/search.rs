//! Branch-and-bound over restricted-growth assignments.
//!
//! Vertices are assigned in label order; vertex `i` may open part
//! `used` or join any already-open part, which fixes part numbering by
//! first occurrence. Pruning:
//!
//! * true twins never share a part;
//! * a vertex's representation is compared against the others only once
//!   it can no longer change, i.e. every part is open and each current
//!   part distance is no larger than the distance to any unassigned vertex;
//! * on `T_2n(W)`, leaves must pass the single-class size rule and the
//!   `(r, s, m)` counting condition before they are accepted.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::true_twins;
use crate::toeplitz::{even_class, family_parameter, odd_class};
use crate::vertex_set::VertexSet;

use super::rules::{classify, pd_lower_bound_family, rsm_feasible, PartClassCounts};
use super::{is_resolving_partition, Partition};

pub const DEFAULT_PD_CAP: usize = 16;

#[derive(Debug, Clone, Copy)]
pub struct PdOptions {
    pub cap: usize,
    /// Use the `T_2n(W)`-specific lower bound and leaf rules when the graph
    /// is recognised as a family member.
    pub family_rules: bool,
    /// Overrides the first `k` tried.
    pub start_k: Option<usize>,
    pub threads: usize,
    pub budget: Budget,
}

impl Default for PdOptions {
    fn default() -> Self {
        PdOptions {
            cap: DEFAULT_PD_CAP,
            family_rules: true,
            start_k: None,
            threads: 1,
            budget: Budget::unlimited(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RefutedK {
    pub k: usize,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionDimension {
    pub value: usize,
    pub witness: Partition,
    pub lower_bound: usize,
    pub refuted: Vec<RefutedK>,
    pub nodes_explored: u64,
}

/// Result of the search at one fixed `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KSearch {
    pub witness: Option<Partition>,
    pub nodes_explored: u64,
}

pub fn partition_dimension(g: &Graph) -> Result<PartitionDimension> {
    partition_dimension_with(g, &PdOptions::default())
}

pub fn partition_dimension_with(g: &Graph, opts: &PdOptions) -> Result<PartitionDimension> {
    let ctx = Context::new(g, opts)?;
    let m = g.order();
    let lower_bound = match ctx.family {
        Some(n) => pd_lower_bound_family(n),
        None if m == 1 => 1,
        None => 2,
    };
    let start = opts.start_k.unwrap_or(lower_bound).clamp(1, m);
    let mut refuted = Vec::new();
    let mut total = 0;
    for k in start..=m {
        let found = ctx.search(k, opts)?;
        total += found.nodes_explored;
        match found.witness {
            Some(witness) => {
                return Ok(PartitionDimension {
                    value: k,
                    witness,
                    lower_bound,
                    refuted,
                    nodes_explored: total,
                })
            }
            None => refuted.push(RefutedK { k, nodes_explored: found.nodes_explored }),
        }
    }
    unreachable!("the all-singletons partition resolves every graph")
}

/// Searches for a resolving partition with exactly `k` parts.
pub fn find_resolving_partition(g: &Graph, k: usize, opts: &PdOptions) -> Result<KSearch> {
    let ctx = Context::new(g, opts)?;
    ctx.search(k, opts)
}

/// Calls `visit` on every resolving partition of `g` (each once, in
/// restricted-growth normal form), for every number of parts. With
/// `twin_pruning` off the search relies only on representation collisions,
/// so it can be used to check twin-based rules. Returns the number visited.
pub fn for_each_resolving_partition(
    g: &Graph,
    twin_pruning: bool,
    budget: &Budget,
    mut visit: impl FnMut(&Partition),
) -> Result<u64> {
    let ctx = Context::unchecked(g, false, twin_pruning)?;
    let mut count = 0;
    for k in 1..=ctx.order {
        if k as u32 * ctx.width > 128 {
            return Err(Error::CapExceeded { what: "partition enumeration", cap: 128 / ctx.width as usize, order: ctx.order });
        }
        let mut st = State::new(&ctx, k);
        st.dfs(0, budget, &mut |s: &State| {
            count += 1;
            visit(&s.partition());
            false
        })?;
    }
    Ok(count)
}

const FAR: u8 = u8::MAX;

struct Context {
    order: usize,
    dm: DistanceMatrix,
    twin_masks: Vec<VertexSet>,
    /// `suffix_min[v * (m + 1) + i]`: nearest distance from `v` to a vertex `>= i`.
    suffix_min: Vec<u8>,
    family: Option<usize>,
    width: u32,
}

impl Context {
    fn new(g: &Graph, opts: &PdOptions) -> Result<Self> {
        let mut ctx = Context::unchecked(g, opts.family_rules, true)?;
        if ctx.order > opts.cap {
            return Err(Error::CapExceeded { what: "partition_dimension", cap: opts.cap, order: ctx.order });
        }
        ctx.family = if opts.family_rules { ctx.family } else { None };
        Ok(ctx)
    }

    fn unchecked(g: &Graph, family_rules: bool, twin_pruning: bool) -> Result<Self> {
        let dm = DistanceMatrix::new(g)?;
        let m = g.order();
        let mut suffix_min = vec![FAR; m * (m + 1)];
        for v in 0..m {
            let row = dm.row(v);
            for i in (0..m).rev() {
                suffix_min[v * (m + 1) + i] = row[i].min(suffix_min[v * (m + 1) + i + 1]);
            }
        }
        let width = (u8::BITS - dm.diameter().leading_zeros()).max(1);
        Ok(Context {
            order: m,
            twin_masks: if twin_pruning {
                true_twins(g).twin_masks(m)
            } else {
                vec![VertexSet::EMPTY; m]
            },
            suffix_min,
            family: if family_rules { family_parameter(g) } else { None },
            width,
            dm,
        })
    }

    fn search(&self, k: usize, opts: &PdOptions) -> Result<KSearch> {
        let m = self.order;
        if k == 0 || k > m {
            return Ok(KSearch { witness: None, nodes_explored: 0 });
        }
        if k as u32 * self.width > 128 {
            return Err(Error::CapExceeded { what: "partition_dimension", cap: opts.cap, order: m });
        }
        if let Some(n) = self.family {
            if !compositions(k).any(|c| rsm_feasible(n, c)) {
                return Ok(KSearch { witness: None, nodes_explored: 0 });
            }
        }
        let found = if opts.threads > 1 {
            self.search_parallel(k, opts)?
        } else {
            let mut st = State::new(self, k);
            let hit = st.dfs(0, &opts.budget, &mut |s: &State| s.leaf_ok())?;
            KSearch {
                witness: hit.then(|| st.partition()),
                nodes_explored: st.nodes,
            }
        };
        if let Some(w) = &found.witness {
            assert!(
                is_resolving_partition(&self.dm, w).resolving,
                "witness failed re-verification"
            );
        }
        Ok(found)
    }

    fn search_parallel(&self, k: usize, opts: &PdOptions) -> Result<KSearch> {
        let depth = self.order.min(7);
        let prefixes = rgs_prefixes(depth, k, self.order);
        let nodes = AtomicU64::new(0);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("thread pool");
        let result = pool.install(|| {
            prefixes.par_iter().find_map_first(|prefix| {
                let mut st = State::new(self, k);
                let outcome = st.replay(prefix).and_then(|alive| {
                    if alive {
                        st.dfs(prefix.len(), &opts.budget, &mut |s: &State| s.leaf_ok())
                    } else {
                        Ok(false)
                    }
                });
                nodes.fetch_add(st.nodes, Ordering::Relaxed);
                match outcome {
                    Ok(true) => Some(Ok(st.partition())),
                    Ok(false) => None,
                    Err(e) => Some(Err(e)),
                }
            })
        });
        Ok(KSearch {
            witness: result.transpose()?,
            nodes_explored: nodes.into_inner(),
        })
    }
}

/// All `(r, s, m)` with `r + s + m = k`.
fn compositions(k: usize) -> impl Iterator<Item = PartClassCounts> {
    (0..=k).flat_map(move |r| (0..=k - r).map(move |s| PartClassCounts { r, s, m: k - r - s }))
}

/// Restricted-growth prefixes of length `depth` that can still be
/// completed to a surjection onto `k` parts over `order` vertices.
fn rgs_prefixes(depth: usize, k: usize, order: usize) -> Vec<Vec<u8>> {
    fn rec(prefix: &mut Vec<u8>, used: usize, depth: usize, k: usize, order: usize, out: &mut Vec<Vec<u8>>) {
        let i = prefix.len();
        if i == depth {
            out.push(prefix.clone());
            return;
        }
        for p in 0..(used + 1).min(k) {
            let now = used.max(p + 1);
            if k - now > order - i - 1 {
                continue;
            }
            prefix.push(p as u8);
            rec(prefix, now, depth, k, order, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(depth), 0, depth, k, order, &mut out);
    out
}

struct State<'a> {
    ctx: &'a Context,
    k: usize,
    part_of: Vec<u8>,
    parts: Vec<VertexSet>,
    used: usize,
    /// `dist[v * k + p]`: current distance from `v` to part `p`.
    dist: Vec<u8>,
    determined: VertexSet,
    keys: Vec<(usize, u128)>,
    undo: Vec<u8>,
    nodes: u64,
}

impl<'a> State<'a> {
    fn new(ctx: &'a Context, k: usize) -> Self {
        State {
            ctx,
            k,
            part_of: vec![0; ctx.order],
            parts: vec![VertexSet::EMPTY; k],
            used: 0,
            dist: vec![FAR; ctx.order * k],
            determined: VertexSet::EMPTY,
            keys: Vec::with_capacity(ctx.order),
            undo: Vec::with_capacity(ctx.order * ctx.order),
            nodes: 0,
        }
    }

    fn partition(&self) -> Partition {
        Partition::from_assignment(self.part_of.iter().map(|&p| p as usize).collect())
            .expect("complete search state is surjective")
    }

    /// Applies a prefix with the same pruning as [`State::dfs`]; `false` if pruned.
    fn replay(&mut self, prefix: &[u8]) -> Result<bool> {
        for (i, &p) in prefix.iter().enumerate() {
            self.nodes += 1;
            let p = p as usize;
            if !self.ctx.twin_masks[i].intersection(self.parts[p]).is_empty() {
                return Ok(false);
            }
            let _undo = self.assign(i, p);
            if !self.admit_determined(i + 1) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Depth-first over assignments of vertices `i..`; stops when `leaf` accepts.
    fn dfs(&mut self, i: usize, budget: &Budget, leaf: &mut dyn FnMut(&State) -> bool) -> Result<bool> {
        let m = self.ctx.order;
        if i == m {
            debug_assert_eq!(self.determined.len(), m);
            return Ok(leaf(self));
        }
        for p in 0..(self.used + 1).min(self.k) {
            let now = self.used.max(p + 1);
            if self.k - now > m - i - 1 {
                continue;
            }
            if !self.ctx.twin_masks[i].intersection(self.parts[p]).is_empty() {
                continue;
            }
            self.nodes += 1;
            budget.tick(self.nodes)?;
            let undo = self.assign(i, p);
            let (det_before, keys_before) = (self.determined, self.keys.len());
            if self.admit_determined(i + 1) && self.dfs(i + 1, budget, leaf)? {
                return Ok(true);
            }
            self.determined = det_before;
            self.keys.truncate(keys_before);
            self.unassign(i, p, undo);
        }
        Ok(false)
    }

    /// Places vertex `i` in part `p`, saving the old part column on the undo stack.
    fn assign(&mut self, i: usize, p: usize) -> usize {
        let k = self.k;
        let old_used = self.used;
        self.part_of[i] = p as u8;
        self.parts[p].insert(i);
        self.used = self.used.max(p + 1);
        let row = self.ctx.dm.row(i);
        for (v, &d) in row.iter().enumerate() {
            let slot = &mut self.dist[v * k + p];
            self.undo.push(*slot);
            *slot = (*slot).min(d);
        }
        old_used
    }

    fn unassign(&mut self, i: usize, p: usize, old_used: usize) {
        let (m, k) = (self.ctx.order, self.k);
        self.parts[p].remove(i);
        self.used = old_used;
        for v in (0..m).rev() {
            self.dist[v * k + p] = self.undo.pop().expect("undo stack underflow");
        }
    }

    /// Marks vertices whose representation is final once vertices `< next`
    /// are assigned, and rejects the node if two final vectors coincide.
    fn admit_determined(&mut self, next: usize) -> bool {
        if self.used < self.k {
            return true;
        }
        let (m, k, width) = (self.ctx.order, self.k, self.ctx.width);
        for v in 0..next {
            if self.determined.contains(v) {
                continue;
            }
            let bound = self.ctx.suffix_min[v * (m + 1) + next];
            let row = &self.dist[v * k..(v + 1) * k];
            if row.iter().any(|&d| d > bound) {
                continue;
            }
            let key = row.iter().fold(0u128, |acc, &d| acc << width | d as u128);
            if self.keys.iter().any(|&(_, other)| other == key) {
                return false;
            }
            self.keys.push((v, key));
            self.determined.insert(v);
        }
        true
    }

    fn leaf_ok(&self) -> bool {
        match self.ctx.family {
            None => true,
            Some(n) => {
                let (odd, even) = (odd_class(n), even_class(n));
                let oversized = self.parts.iter().any(|&part| {
                    (part.is_subset(odd) || part.is_subset(even)) && part.len() > n / 2
                });
                !oversized && rsm_feasible(n, classify(n, &self.parts))
            }
        }
    }
}
