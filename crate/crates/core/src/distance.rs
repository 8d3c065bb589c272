use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// All-pairs hop distances of a connected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u8>,
}

impl DistanceMatrix {
    /// Breadth-first search from every vertex over bit-vector rows.
    pub fn new(g: &Graph) -> Result<Self> {
        let m = g.order();
        let reach = g.component_of(0);
        if let Some(v) = g.vertices().difference(reach).first() {
            return Err(Error::Disconnected(1, v + 1));
        }
        let mut dist = vec![0u8; m * m];
        for s in 0..m {
            let row = &mut dist[s * m..(s + 1) * m];
            let mut seen = VertexSet::singleton(s);
            let mut frontier = seen;
            let mut d = 0u8;
            while !frontier.is_empty() {
                d += 1;
                let mut next = VertexSet::EMPTY;
                for u in frontier {
                    next = next.union(g.neighbors(u));
                }
                frontier = next.difference(seen);
                seen = seen.union(frontier);
                for u in frontier {
                    row[u] = d;
                }
            }
        }
        Ok(DistanceMatrix { order: m, dist })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u8 {
        self.dist[u * self.order + v]
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u8] {
        &self.dist[v * self.order..(v + 1) * self.order]
    }

    pub fn diameter(&self) -> u8 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    /// `Γ_r(v)`: vertices at distance exactly `r` from `v`.
    pub fn sphere(&self, v: usize, r: u8) -> VertexSet {
        self.row(v)
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == r)
            .map(|(u, _)| u)
            .collect()
    }

    /// Distance from `v` to the nearest member of `set`, or `None` for an empty set.
    pub fn to_set(&self, v: usize, set: VertexSet) -> Option<u8> {
        let row = self.row(v);
        set.iter().map(|u| row[u]).min()
    }
}

impl std::fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<&[u8]> = (0..self.order).map(|v| self.row(v)).collect();
        f.debug_struct("DistanceMatrix").field("rows", &rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toeplitz::build_family;

    #[test]
    fn family_t12_distances() {
        let dm = DistanceMatrix::new(&build_family(6).unwrap()).unwrap();
        assert_eq!(dm.get(0, 6), 1, "twin edge x_1 ~ x_7");
        assert_eq!(dm.get(0, 10), 2, "d(x_1, x_11)");
        assert!((0..12).all(|v| dm.get(v, v) == 0));
        assert_eq!(dm.diameter(), 2);
    }

    #[test]
    fn path_distances() {
        let dm = DistanceMatrix::new(&Graph::path(5).unwrap()).unwrap();
        assert_eq!(dm.row(0), &[0, 1, 2, 3, 4]);
        assert_eq!(dm.sphere(2, 2).labels(), vec![1, 5]);
        assert_eq!(dm.to_set(0, VertexSet::from_labels([4, 5])), Some(3));
        assert_eq!(dm.to_set(0, VertexSet::EMPTY), None);
    }

    #[test]
    fn disconnected_names_unreachable_pair() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(DistanceMatrix::new(&g), Err(Error::Disconnected(1, 3)));
    }
}
