//! The dihedral group of order `2n` and its Cayley graph on the connection
//! set `{b, ab, .., a^{n-1}b} ∪ {a^{n/2}}`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::toeplitz::check_family_parameter;

/// `a^rot b^reflect` in the group generated by a rotation `a` of order `n`
/// and a reflection `b` with `b a b = a^{-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dihedral {
    pub rot: usize,
    pub reflect: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DihedralGroup {
    n: usize,
}

impl DihedralGroup {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        DihedralGroup { n }
    }

    pub fn order(&self) -> usize {
        2 * self.n
    }

    pub fn identity(&self) -> Dihedral {
        Dihedral { rot: 0, reflect: false }
    }

    pub fn rotation(&self, i: usize) -> Dihedral {
        Dihedral { rot: i % self.n, reflect: false }
    }

    /// `a^i b`
    pub fn reflection(&self, i: usize) -> Dihedral {
        Dihedral { rot: i % self.n, reflect: true }
    }

    /// `(a^i b^f)(a^j b^g) = a^{i + (-1)^f j} b^{f+g}`
    pub fn mul(&self, x: Dihedral, y: Dihedral) -> Dihedral {
        let j = if x.reflect { self.n - y.rot % self.n } else { y.rot };
        Dihedral {
            rot: (x.rot + j) % self.n,
            reflect: x.reflect ^ y.reflect,
        }
    }

    pub fn inv(&self, x: Dihedral) -> Dihedral {
        if x.reflect {
            x
        } else {
            self.rotation(self.n - x.rot)
        }
    }

    /// Elements indexed rotations first: `a^i ↦ i`, `a^i b ↦ n + i`.
    pub fn index(&self, x: Dihedral) -> usize {
        x.rot + if x.reflect { self.n } else { 0 }
    }

    pub fn element(&self, index: usize) -> Dihedral {
        Dihedral {
            rot: index % self.n,
            reflect: index >= self.n,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Dihedral> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }

    pub fn name(&self, x: Dihedral) -> String {
        let a = match x.rot {
            0 => String::new(),
            1 => "a".to_string(),
            r => format!("a^{r}"),
        };
        match (a.is_empty(), x.reflect) {
            (true, false) => "1".to_string(),
            (true, true) => "b".to_string(),
            (false, false) => a,
            (false, true) => format!("{a}b"),
        }
    }
}

/// `{a^i b : 0 <= i < n} ∪ {a^{n/2}}`.
pub fn connection_set(group: &DihedralGroup) -> Vec<Dihedral> {
    let n = group.n;
    let mut psi: Vec<Dihedral> = (0..n).map(|i| group.reflection(i)).collect();
    psi.push(group.rotation(n / 2));
    psi
}

/// Builds `Cay(G, psi)`: `g ~ h` iff `g^{-1} h ∈ psi`.
pub fn cayley_graph(group: &DihedralGroup, psi: &[Dihedral]) -> Result<Graph> {
    if psi.contains(&group.identity()) {
        return Err(Error::InvalidConnectionSet("contains the identity".into()));
    }
    if let Some(x) = psi.iter().find(|&&x| !psi.contains(&group.inv(x))) {
        return Err(Error::InvalidConnectionSet(format!(
            "not inverse-closed: {} ∈ Ψ but its inverse is not",
            group.name(*x)
        )));
    }
    let mut edges = Vec::new();
    for g in group.elements() {
        let gi = group.inv(g);
        for h in group.elements() {
            if psi.contains(&group.mul(gi, h)) {
                edges.push((group.index(g), group.index(h)));
            }
        }
    }
    let labels = group.elements().map(|x| group.name(x)).collect();
    Ok(Graph::from_edges(group.order(), edges)?.with_labels(labels))
}

pub fn dihedral_cayley(n: usize) -> Result<Graph> {
    check_family_parameter(n)?;
    let group = DihedralGroup::new(n);
    cayley_graph(&group, &connection_set(&group))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toeplitz::build_family;

    #[test]
    fn group_axioms() {
        for n in [3, 4, 6] {
            let d = DihedralGroup::new(n);
            let e = d.identity();
            for x in d.elements() {
                assert_eq!(d.mul(x, e), x);
                assert_eq!(d.mul(e, x), x);
                assert_eq!(d.mul(x, d.inv(x)), e);
                for y in d.elements() {
                    for z in d.elements() {
                        assert_eq!(d.mul(d.mul(x, y), z), d.mul(x, d.mul(y, z)));
                    }
                }
            }
            // b a b = a^{-1}
            let (a, b) = (d.rotation(1), d.reflection(0));
            assert_eq!(d.mul(d.mul(b, a), b), d.inv(a));
        }
    }

    #[test]
    fn cayley_t8_shape() {
        let g = dihedral_cayley(4).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.regular_degree(), Some(5));
        assert!((0..8).all(|v| !g.has_edge(v, v)));
        assert_eq!(g.label(0), "1");
        assert_eq!(g.label(5), "ab");
    }

    #[test]
    fn cayley_degree_sequence_matches_t12() {
        let mut a = dihedral_cayley(6).unwrap().degrees();
        let mut b = build_family(6).unwrap().degrees();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_odd_n_and_bad_sets() {
        assert!(dihedral_cayley(5).is_err());
        let d = DihedralGroup::new(6);
        assert!(cayley_graph(&d, &[d.identity()]).is_err());
        assert!(cayley_graph(&d, &[d.rotation(1)]).is_err());
    }
}
