//! Twin structure and distance-regularity.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::distance::DistanceMatrix;
use crate::error::Result;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Unordered pairs `(u, v)`, `u < v`, with `N[u] = N[v]`; 0-based, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TwinPairs {
    pub pairs: Vec<(usize, usize)>,
}

impl TwinPairs {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Pairs as 1-based labels.
    pub fn labels(&self) -> Vec<(usize, usize)> {
        self.pairs.iter().map(|&(u, v)| (u + 1, v + 1)).collect()
    }

    /// For each vertex, the set of its true twins.
    pub fn twin_masks(&self, order: usize) -> Vec<VertexSet> {
        let mut masks = vec![VertexSet::EMPTY; order];
        for &(u, v) in &self.pairs {
            masks[u].insert(v);
            masks[v].insert(u);
        }
        masks
    }

    /// True when no vertex lies in two pairs.
    pub fn is_matching(&self) -> bool {
        let mut seen = VertexSet::EMPTY;
        for &(u, v) in &self.pairs {
            if seen.contains(u) || seen.contains(v) {
                return false;
            }
            seen.insert(u);
            seen.insert(v);
        }
        true
    }
}

pub fn true_twins(g: &Graph) -> TwinPairs {
    let m = g.order();
    let mut pairs = Vec::new();
    for u in 0..m {
        let nu = g.closed_neighbors(u);
        // true twins are adjacent, so only neighbours need checking
        for v in g.neighbors(u).iter().filter(|&v| v > u) {
            if g.closed_neighbors(v) == nu {
                pairs.push((u, v));
            }
        }
    }
    TwinPairs { pairs }
}

/// Equivalence classes of the true-twin relation with at least two members.
pub fn twin_classes(g: &Graph) -> Vec<VertexSet> {
    let mut rest = g.vertices();
    let mut classes = Vec::new();
    while let Some(u) = rest.first() {
        let nu = g.closed_neighbors(u);
        let class: VertexSet = rest.iter().filter(|&v| g.closed_neighbors(v) == nu).collect();
        rest = rest.difference(class);
        if class.len() > 1 {
            classes.push(class);
        }
    }
    classes
}

/// Counts for a vertex `u` at distance `r` from a base vertex `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntersectionEntry {
    pub base: usize,
    pub vertex: usize,
    pub distance: u8,
    /// `|N(u) ∩ Γ_{r-1}(v)|`
    pub c: usize,
    /// `|N(u) ∩ Γ_r(v)|`
    pub a: usize,
    /// `|N(u) ∩ Γ_{r+1}(v)|`
    pub b: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct IntersectionProfile {
    /// `layer_sizes[v][r] = |Γ_r(v)|`
    pub layer_sizes: Vec<Vec<usize>>,
    pub entries: Vec<IntersectionEntry>,
}

impl IntersectionProfile {
    pub fn c_values(&self, r: u8) -> BTreeSet<usize> {
        self.entries.iter().filter(|e| e.distance == r).map(|e| e.c).collect()
    }

    pub fn b_values(&self, r: u8) -> BTreeSet<usize> {
        self.entries.iter().filter(|e| e.distance == r).map(|e| e.b).collect()
    }

    pub fn max_distance(&self) -> u8 {
        self.entries.iter().map(|e| e.distance).max().unwrap_or(0)
    }
}

pub fn intersection_profile(g: &Graph, dm: &DistanceMatrix) -> IntersectionProfile {
    let m = g.order();
    let diam = dm.diameter();
    let mut profile = IntersectionProfile::default();
    for v in 0..m {
        let spheres: Vec<VertexSet> = (0..=diam + 1).map(|r| dm.sphere(v, r)).collect();
        profile
            .layer_sizes
            .push(spheres[..=diam as usize].iter().map(|s| s.len()).collect());
        for u in 0..m {
            let r = dm.get(v, u);
            let n = g.neighbors(u);
            let c = if r == 0 { 0 } else { n.intersection(spheres[r as usize - 1]).len() };
            profile.entries.push(IntersectionEntry {
                base: v,
                vertex: u,
                distance: r,
                c,
                a: n.intersection(spheres[r as usize]).len(),
                b: n.intersection(spheres[r as usize + 1]).len(),
            });
        }
    }
    profile
}

/// Returns whether `g` is distance-regular, with the full profile for diagnostics.
///
/// Irregular graphs answer `false`. Errors on disconnected input.
pub fn is_distance_regular(g: &Graph) -> Result<(bool, IntersectionProfile)> {
    let dm = DistanceMatrix::new(g)?;
    let profile = intersection_profile(g, &dm);
    if g.regular_degree().is_none() {
        return Ok((false, profile));
    }
    let regular = (1..=profile.max_distance())
        .all(|r| profile.c_values(r).len() == 1 && profile.b_values(r).len() == 1);
    Ok((regular, profile))
}
