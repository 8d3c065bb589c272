//! Structural rules for resolving partitions of `T_2n(W)`.

use serde::Serialize;

use crate::graph::Graph;
use crate::structure::true_twins;
use crate::toeplitz::{check_family_parameter, even_class, family_partner, odd_class};
use crate::vertex_set::VertexSet;

use super::Partition;

/// A true-twin pair placed in one part. True twins are at equal distance
/// from every other vertex, so such a partition never resolves.
pub fn twin_part_violation(g: &Graph, p: &Partition) -> Option<(usize, usize)> {
    true_twins(g)
        .pairs
        .into_iter()
        .find(|&(u, v)| p.part_of(u) == p.part_of(v))
}

/// A part inside one parity class with more than `n/2` vertices; such a
/// part must contain a twin pair.
pub fn side_part_size_violation(n: usize, p: &Partition) -> Option<usize> {
    let (odd, even) = (odd_class(n), even_class(n));
    p.parts()
        .iter()
        .position(|&part| (part.is_subset(odd) || part.is_subset(even)) && part.len() > n / 2)
}

/// Parts by parity composition: `r` odd-only, `s` even-only, `m` mixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PartClassCounts {
    pub r: usize,
    pub s: usize,
    pub m: usize,
}

impl PartClassCounts {
    pub fn k(&self) -> usize {
        self.r + self.s + self.m
    }
}

pub fn class_counts(n: usize, p: &Partition) -> PartClassCounts {
    classify(n, &p.parts())
}

pub(crate) fn classify(n: usize, parts: &[VertexSet]) -> PartClassCounts {
    let (odd, even) = (odd_class(n), even_class(n));
    let mut c = PartClassCounts { r: 0, s: 0, m: 0 };
    for &part in parts {
        if part.is_subset(odd) {
            c.r += 1;
        } else if part.is_subset(even) {
            c.s += 1;
        } else {
            c.m += 1;
        }
    }
    c
}

/// Counting condition on the composition of a resolving partition:
/// the `n` odd vertices need `n` distinct vectors, of which at most
/// `r² + m(r+1)` exist, and symmetrically for the even side.
pub fn rsm_feasible(n: usize, c: PartClassCounts) -> bool {
    n <= c.r * c.r + c.m * (c.r + 1) && n <= c.s * c.s + c.m * (c.s + 1)
}

/// Least `k` with `k² >= 4(n - 1)`, i.e. `⌈2√(n-1)⌉`.
pub fn pd_lower_bound_family(n: usize) -> usize {
    let target = 4 * (n - 1);
    let mut k = 0;
    while k * k < target {
        k += 1;
    }
    k
}

pub fn meets_family_bound(n: usize, k: usize) -> bool {
    k >= pd_lower_bound_family(n)
}

/// The size-`n+1` resolving partition: labels `1..=n` (half of each parity
/// class, no twins) form one part and every other vertex is a singleton,
/// odd labels listed before even ones.
pub fn canonical_partition_family(n: usize) -> crate::error::Result<Partition> {
    check_family_parameter(n)?;
    let mut parts: Vec<Vec<usize>> = Vec::with_capacity(n + 1);
    let big: Vec<usize> = (0..n).step_by(2).chain((1..n).step_by(2)).collect();
    parts.push(big);
    parts.extend((n..2 * n).step_by(2).map(|v| vec![v]));
    parts.extend((n + 1..2 * n).step_by(2).map(|v| vec![v]));
    Partition::from_parts(2 * n, &parts)
}

/// Shapes of a large part whose presence constrains the rest of a partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfPartShape {
    /// `n/2` vertices of one parity class, no two of them twins
    /// (a maximum independent set of that class).
    SideIndependent,
    /// `n` vertices: an independent half of each parity class.
    BalancedHalves,
}

/// What the remaining vertices of the affected classes must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RemainderRule {
    /// Each remaining vertex is alone in its part.
    Singletons,
    /// Remaining vertices of the same class lie in pairwise distinct parts.
    DistinctWithinSide,
}

fn is_independent_half(n: usize, set: VertexSet, class: VertexSet) -> bool {
    set.is_subset(class)
        && set.len() == n / 2
        && set.iter().all(|v| !set.contains(family_partner(n, v)))
}

fn affected_classes(n: usize, part: VertexSet, shape: HalfPartShape) -> Option<Vec<VertexSet>> {
    let (odd, even) = (odd_class(n), even_class(n));
    match shape {
        HalfPartShape::SideIndependent => [odd, even]
            .into_iter()
            .find(|&c| is_independent_half(n, part, c))
            .map(|c| vec![c]),
        HalfPartShape::BalancedHalves => (part.len() == n
            && is_independent_half(n, part.intersection(odd), odd)
            && is_independent_half(n, part.intersection(even), even))
        .then(|| vec![odd, even]),
    }
}

/// Indices of parts with the given shape.
pub fn half_part_instances(n: usize, p: &Partition, shape: HalfPartShape) -> Vec<usize> {
    p.parts()
        .into_iter()
        .enumerate()
        .filter(|&(_, part)| affected_classes(n, part, shape).is_some())
        .map(|(i, _)| i)
        .collect()
}

/// Evaluates `rule` for the vertices left outside part `part_index`.
///
/// Returns `None` when that part does not have the shape.
pub fn remainder_holds(
    n: usize,
    p: &Partition,
    part_index: usize,
    shape: HalfPartShape,
    rule: RemainderRule,
) -> Option<bool> {
    let parts = p.parts();
    let part = parts[part_index];
    let classes = affected_classes(n, part, shape)?;
    let holds = classes.into_iter().all(|class| {
        let rest = class.difference(part);
        match rule {
            RemainderRule::Singletons => rest.iter().all(|v| parts[p.part_of(v)].len() == 1),
            RemainderRule::DistinctWithinSide => {
                let ids: VertexSet = rest.iter().map(|v| p.part_of(v)).collect();
                ids.len() == rest.len()
            }
        }
    });
    Some(holds)
}
