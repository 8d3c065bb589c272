//! Vertex partitions, their metric representations, and the exact
//! partition-dimension search.

mod rules;
mod search;

pub use rules::{
    canonical_partition_family, class_counts, half_part_instances, meets_family_bound,
    pd_lower_bound_family, remainder_holds, rsm_feasible, side_part_size_violation,
    twin_part_violation, HalfPartShape, PartClassCounts, RemainderRule,
};
pub use search::{
    find_resolving_partition, for_each_resolving_partition, partition_dimension, partition_dimension_with, KSearch,
    PartitionDimension, PdOptions, RefutedK, DEFAULT_PD_CAP,
};

use std::fmt;

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::resolving::ResolveReport;
use crate::vertex_set::VertexSet;

/// A surjective assignment of vertices to parts `0..k`.
///
/// Parts keep the order they were given in. Solvers always return the
/// restricted-growth normal form, where parts are numbered by first
/// occurrence in vertex order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    part_of: Vec<usize>,
    k: usize,
}

impl Partition {
    pub fn from_assignment(part_of: Vec<usize>) -> Result<Self> {
        if part_of.is_empty() {
            return Err(Error::InvalidPartition("no vertices".into()));
        }
        let k = part_of.iter().max().unwrap() + 1;
        let mut seen = vec![false; k];
        for &p in &part_of {
            seen[p] = true;
        }
        if let Some(p) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("part {p} is empty")));
        }
        Ok(Partition { part_of, k })
    }

    /// Parts given as 0-based vertex lists, in the order given.
    pub fn from_parts(order: usize, parts: &[Vec<usize>]) -> Result<Self> {
        let mut part_of = vec![usize::MAX; order];
        for (i, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::InvalidPartition(format!("part {} is empty", i + 1)));
            }
            for &v in part {
                if v >= order {
                    return Err(Error::InvalidPartition(format!(
                        "label {} is outside 1..={order}",
                        v + 1
                    )));
                }
                if part_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("label {} appears twice", v + 1)));
                }
                part_of[v] = i;
            }
        }
        if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidPartition(format!("label {} is missing", v + 1)));
        }
        Ok(Partition { part_of, k: parts.len() })
    }

    /// Parts given as 1-based labels.
    pub fn from_label_parts(order: usize, parts: &[Vec<usize>]) -> Result<Self> {
        let zero_based: Result<Vec<Vec<usize>>> = parts
            .iter()
            .map(|p| {
                p.iter()
                    .map(|&l| {
                        l.checked_sub(1).ok_or_else(|| {
                            Error::InvalidPartition(format!("label 0 is outside 1..={order}"))
                        })
                    })
                    .collect()
            })
            .collect();
        Partition::from_parts(order, &zero_based?)
    }

    /// Parses `"1,3,5;7,9;11"`: parts separated by `;`, 1-based labels by `,`.
    pub fn parse(text: &str, order: usize) -> Result<Self> {
        let parts: Result<Vec<Vec<usize>>> = text
            .trim()
            .split(';')
            .enumerate()
            .map(|(i, part)| {
                let part = part.trim();
                if part.is_empty() {
                    return Err(Error::InvalidPartition(format!("part {} is empty", i + 1)));
                }
                part.split(',')
                    .map(|l| {
                        l.trim().parse::<usize>().map_err(|_| {
                            Error::InvalidPartition(format!("{:?} is not a vertex label", l.trim()))
                        })
                    })
                    .collect()
            })
            .collect();
        Partition::from_label_parts(order, &parts?)
    }

    pub fn singletons(order: usize) -> Self {
        Partition { part_of: (0..order).collect(), k: order }
    }

    pub fn order(&self) -> usize {
        self.part_of.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.part_of
    }

    pub fn parts(&self) -> Vec<VertexSet> {
        let mut parts = vec![VertexSet::EMPTY; self.k];
        for (v, &p) in self.part_of.iter().enumerate() {
            parts[p].insert(v);
        }
        parts
    }

    pub fn part(&self, i: usize) -> VertexSet {
        self.part_of
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p == i)
            .map(|(v, _)| v)
            .collect()
    }

    /// Parts as sorted 1-based label lists, in part order.
    pub fn label_parts(&self) -> Vec<Vec<usize>> {
        self.parts().into_iter().map(|p| p.labels()).collect()
    }

    pub fn is_normal_form(&self) -> bool {
        let mut next = 0;
        for &p in &self.part_of {
            if p > next {
                return false;
            }
            if p == next {
                next += 1;
            }
        }
        true
    }

    /// Renumbers parts by first occurrence.
    pub fn normalized(&self) -> Partition {
        let mut map = vec![usize::MAX; self.k];
        let mut next = 0;
        let part_of = self
            .part_of
            .iter()
            .map(|&p| {
                if map[p] == usize::MAX {
                    map[p] = next;
                    next += 1;
                }
                map[p]
            })
            .collect();
        Partition { part_of, k: self.k }
    }

    pub fn to_text(&self) -> String {
        self.label_parts()
            .iter()
            .map(|p| p.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self.to_text())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `r(v|Σ)`: distance from `v` to each part, in part order.
pub fn representation(dm: &DistanceMatrix, p: &Partition, v: usize) -> Vec<u8> {
    let mut rep = vec![u8::MAX; p.k()];
    for (u, &d) in dm.row(v).iter().enumerate() {
        let slot = &mut rep[p.part_of(u)];
        *slot = (*slot).min(d);
    }
    rep
}

pub fn is_resolving_partition(dm: &DistanceMatrix, p: &Partition) -> ResolveReport {
    assert_eq!(dm.order(), p.order(), "partition and graph orders differ");
    let vectors = (0..p.order()).map(|v| representation(dm, p, v)).collect();
    ResolveReport::from_vectors(vectors)
}
