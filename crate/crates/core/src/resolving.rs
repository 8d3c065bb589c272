//! Resolving sets and exact metric dimension.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::budget::Budget;
use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::{true_twins, twin_classes};
use crate::vertex_set::VertexSet;

pub const DEFAULT_METRIC_DIM_CAP: usize = 20;
pub const DEFAULT_TRANSVERSAL_CAP: usize = 32;

/// Outcome of a resolving-set or resolving-partition check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolveReport {
    pub resolving: bool,
    /// Lexicographically first colliding pair, 0-based.
    pub witness_collision: Option<(usize, usize)>,
    /// Representation vector of every vertex.
    pub vectors: Option<Vec<Vec<u8>>>,
}

impl ResolveReport {
    /// Builds the report from per-vertex vectors.
    pub fn from_vectors(vectors: Vec<Vec<u8>>) -> Self {
        let collision = first_collision(&vectors);
        ResolveReport {
            resolving: collision.is_none(),
            witness_collision: collision,
            vectors: Some(vectors),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "resolving": self.resolving,
            "witness_collision": self.witness_collision.map(|(u, v)| [u + 1, v + 1]),
            "vectors": self.vectors,
        })
    }
}

/// Smallest `(u, v)`, `u < v`, with equal vectors.
pub(crate) fn first_collision<T: Eq + std::hash::Hash>(vectors: &[T]) -> Option<(usize, usize)> {
    let mut groups: HashMap<&T, (usize, Option<usize>)> = HashMap::new();
    for (v, key) in vectors.iter().enumerate() {
        groups
            .entry(key)
            .and_modify(|(_, second)| {
                second.get_or_insert(v);
            })
            .or_insert((v, None));
    }
    groups
        .into_values()
        .filter_map(|(first, second)| second.map(|s| (first, s)))
        .min()
}

/// `D(v|S)` in increasing vertex order of `s`.
pub fn distance_vector(dm: &DistanceMatrix, s: VertexSet, v: usize) -> Vec<u8> {
    let row = dm.row(v);
    s.iter().map(|u| row[u]).collect()
}

pub fn is_resolving_set(dm: &DistanceMatrix, s: VertexSet) -> ResolveReport {
    let vectors = (0..dm.order()).map(|v| distance_vector(dm, s, v)).collect();
    ResolveReport::from_vectors(vectors)
}

/// Packs distance vectors into `u128` keys and checks distinctness by sorting.
struct Packer {
    width: u32,
}

impl Packer {
    fn new(dm: &DistanceMatrix) -> Self {
        let width = (u8::BITS - dm.diameter().leading_zeros()).max(1);
        Packer { width }
    }

    fn fits(&self, len: usize) -> bool {
        len as u32 * self.width <= 128
    }

    fn all_distinct(&self, dm: &DistanceMatrix, s: VertexSet, keys: &mut Vec<u128>) -> bool {
        if !self.fits(s.len()) {
            return is_resolving_set(dm, s).resolving;
        }
        keys.clear();
        for v in 0..dm.order() {
            let row = dm.row(v);
            keys.push(s.iter().fold(0u128, |k, u| k << self.width | row[u] as u128));
        }
        keys.sort_unstable();
        keys.windows(2).all(|w| w[0] != w[1])
    }
}

/// `Σ (|C| - 1)` over true-twin classes `C`: a resolving set misses at most
/// one vertex of each class. For the family this is the number of twin pairs.
pub fn twin_lower_bound(g: &Graph) -> usize {
    twin_classes(g).iter().map(|c| c.len() - 1).sum()
}

#[derive(Debug, Clone, Copy)]
pub struct MetricDimOptions {
    pub cap: usize,
    /// Order limit for graphs whose twin pairs form a matching and that are
    /// resolved by a twin transversal.
    pub transversal_cap: usize,
    pub budget: Budget,
}

impl Default for MetricDimOptions {
    fn default() -> Self {
        MetricDimOptions {
            cap: DEFAULT_METRIC_DIM_CAP,
            transversal_cap: DEFAULT_TRANSVERSAL_CAP,
            budget: Budget::unlimited(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricDimension {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
}

pub fn metric_dimension(g: &Graph) -> Result<MetricDimension> {
    metric_dimension_with(g, &MetricDimOptions::default())
}

pub fn metric_dimension_with(g: &Graph, opts: &MetricDimOptions) -> Result<MetricDimension> {
    let dm = DistanceMatrix::new(g)?;
    let m = g.order();
    if m == 1 {
        return Ok(MetricDimension { value: 0, witness: VertexSet::EMPTY, nodes_explored: 1 });
    }
    let packer = Packer::new(&dm);
    let mut keys = Vec::with_capacity(m);
    let mut nodes = 0u64;
    let lower = twin_lower_bound(g);
    let twins = true_twins(g);

    let finish = |witness: VertexSet, nodes: u64| {
        let report = is_resolving_set(&dm, witness);
        assert!(report.resolving, "witness failed re-verification");
        Ok(MetricDimension { value: witness.len(), witness, nodes_explored: nodes })
    };

    // Disjoint twin pairs: a resolving set of size #pairs takes exactly one
    // vertex from every pair and nothing else.
    let transversal_path = twins.is_matching() && lower == twins.len() && lower > 0;
    if transversal_path && m <= opts.transversal_cap {
        let pairs = &twins.pairs;
        for choice in 0u64..1 << pairs.len() {
            nodes += 1;
            opts.budget.tick(nodes)?;
            let s: VertexSet = pairs
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| if choice >> i & 1 == 0 { u } else { v })
                .collect();
            if packer.all_distinct(&dm, s, &mut keys) {
                return finish(s, nodes);
            }
        }
    }
    if m > opts.cap {
        return Err(Error::CapExceeded { what: "metric_dimension", cap: opts.cap, order: m });
    }

    let classes = twin_classes(g);
    let start = if transversal_path { lower + 1 } else { lower.max(1) };
    for size in start..=m {
        // Gosper's hack walks k-subsets in colexicographic order
        let mut s: u128 = (1u128 << size) - 1;
        let limit: u128 = 1u128 << m;
        while s < limit {
            let set = VertexSet::from_bits(s as u64);
            if classes.iter().all(|c| c.difference(set).len() <= 1) {
                nodes += 1;
                opts.budget.tick(nodes)?;
                if packer.all_distinct(&dm, set, &mut keys) {
                    return finish(set, nodes);
                }
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    unreachable!("the full vertex set always resolves")
}
