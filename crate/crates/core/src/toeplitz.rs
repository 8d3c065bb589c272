//! Toeplitz graphs and the family `T_2n(W)`.
//!
//! A Toeplitz graph on `x_1..x_m` joins `x_i` and `x_j` whenever `|i - j|`
//! is one of its jumps. The family graph `T_2n(W)` uses every odd jump
//! `1, 3, .., 2n-1` together with the jump `n`, for even `n >= 4`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToeplitzSpec {
    order: usize,
    jumps: BTreeSet<usize>,
}

impl ToeplitzSpec {
    pub fn new(order: usize, jumps: impl IntoIterator<Item = usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let jumps: BTreeSet<usize> = jumps.into_iter().collect();
        if jumps.is_empty() {
            return Err(Error::EmptyJumps);
        }
        if let Some(&jump) = jumps.iter().find(|&&t| t == 0 || t >= order) {
            return Err(Error::JumpOutOfRange { jump, max: order.saturating_sub(1) });
        }
        Ok(ToeplitzSpec { order, jumps })
    }

    /// Connection set of `T_2n(W)`: odd jumps plus `n`.
    pub fn family(n: usize) -> Result<Self> {
        check_family_parameter(n)?;
        ToeplitzSpec::new(2 * n, (1..2 * n).step_by(2).chain([n]))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn jumps(&self) -> impl Iterator<Item = usize> + '_ {
        self.jumps.iter().copied()
    }
}

pub fn check_family_parameter(n: usize) -> Result<()> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::InvalidFamilyParameter(n));
    }
    Ok(())
}

pub fn build_toeplitz(spec: &ToeplitzSpec) -> Result<Graph> {
    let m = spec.order;
    let mut edges = Vec::new();
    for t in spec.jumps() {
        for i in 0..m - t {
            edges.push((i, i + t));
        }
    }
    Graph::from_edges(m, edges)
}

/// `T_2n(W)` for even `n >= 4`.
pub fn build_family(n: usize) -> Result<Graph> {
    build_toeplitz(&ToeplitzSpec::family(n)?)
}

/// Odd-labelled vertices `x_1, x_3, ..` (0-based even indices) of a graph on `2n` vertices.
pub fn odd_class(n: usize) -> VertexSet {
    (0..2 * n).step_by(2).collect()
}

/// Even-labelled vertices `x_2, x_4, ..`.
pub fn even_class(n: usize) -> VertexSet {
    (1..2 * n).step_by(2).collect()
}

/// The twin of `v` in `T_2n(W)`: `x_i ↦ x_{i+n}`, wrapping within `x_1..x_2n`.
#[inline]
pub fn family_partner(n: usize, v: usize) -> usize {
    (v + n) % (2 * n)
}

/// Recognises `T_2n(W)` structurally and returns `n`.
///
/// The graph must be `K_{n,n}` between the odd and even labelled classes
/// plus the matching `x_i ~ x_{i+n}` inside each class, and nothing else.
/// Family-only pruning rules are gated on this check.
pub fn family_parameter(g: &Graph) -> Option<usize> {
    let m = g.order();
    if !m.is_multiple_of(2) {
        return None;
    }
    let n = m / 2;
    if check_family_parameter(n).is_err() {
        return None;
    }
    let (odd, even) = (odd_class(n), even_class(n));
    (0..m).all(|v| {
        let other = if v % 2 == 0 { even } else { odd };
        g.neighbors(v) == other.with(family_partner(n, v))
    })
    .then_some(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t8_is_five_regular_with_twenty_edges() {
        let g = build_toeplitz(&ToeplitzSpec::new(8, [1, 3, 5, 7, 4]).unwrap()).unwrap();
        assert_eq!(g.regular_degree(), Some(5));
        assert_eq!(g.edge_count(), 20);
        assert_eq!(g, build_family(4).unwrap());
    }

    #[test]
    fn smallest_toeplitz_graph_is_one_edge() {
        let g = build_toeplitz(&ToeplitzSpec::new(2, [1]).unwrap()).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn jump_two_on_five_vertices_splits_by_parity() {
        let g = build_toeplitz(&ToeplitzSpec::new(5, [2]).unwrap()).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].labels(), vec![1, 3, 5]);
        assert_eq!(comps[1].labels(), vec![2, 4]);
    }

    #[test]
    fn rejects_bad_specs() {
        assert_eq!(ToeplitzSpec::new(5, []), Err(Error::EmptyJumps));
        assert_eq!(
            ToeplitzSpec::new(5, [1, 5]),
            Err(Error::JumpOutOfRange { jump: 5, max: 4 })
        );
        assert_eq!(
            ToeplitzSpec::new(5, [0]),
            Err(Error::JumpOutOfRange { jump: 0, max: 4 })
        );
        // duplicates collapse
        assert_eq!(ToeplitzSpec::new(5, [2, 2]).unwrap().jumps().count(), 1);
    }

    #[test]
    fn family_parameter_checks() {
        assert_eq!(build_family(3), Err(Error::InvalidFamilyParameter(3)));
        assert_eq!(build_family(2), Err(Error::InvalidFamilyParameter(2)));
        assert_eq!(build_family(7), Err(Error::InvalidFamilyParameter(7)));
        let g = build_family(6).unwrap();
        assert!(g.has_edge(0, 6), "x_1 ~ x_7");
        assert_eq!(family_parameter(&g), Some(6));
        assert_eq!(family_parameter(&Graph::complete(8).unwrap()), None);
    }

    #[test]
    fn partner_wraps_within_labels() {
        assert_eq!(family_partner(6, 0), 6);
        assert_eq!(family_partner(6, 11), 5);
    }
}
