//! k-dominating sets: every vertex outside the set has at least `k`
//! neighbours inside it.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::toeplitz::check_family_parameter;
use crate::vertex_set::VertexSet;

pub const DEFAULT_DOMINATION_CAP: usize = 24;

/// The smallest vertex outside `d` with fewer than `k` neighbours in `d`.
pub fn first_deficient(g: &Graph, d: VertexSet, k: usize) -> Option<usize> {
    g.vertices()
        .difference(d)
        .iter()
        .find(|&v| g.neighbors(v).intersection(d).len() < k)
}

pub fn is_k_dominating(g: &Graph, d: VertexSet, k: usize) -> bool {
    first_deficient(g, d, k).is_none()
}

#[derive(Debug, Clone, Copy)]
pub struct DominationOptions {
    pub cap: usize,
    pub budget: Budget,
}

impl Default for DominationOptions {
    fn default() -> Self {
        DominationOptions { cap: DEFAULT_DOMINATION_CAP, budget: Budget::unlimited() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KDomination {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
}

pub fn k_domination_number(g: &Graph, k: usize) -> Result<KDomination> {
    k_domination_number_with(g, k, &DominationOptions::default())
}

/// Exact `γ_k` by trying sizes upward. Outside vertices need `k` neighbours
/// in the set, so unless the set is everything it has at least `k` members.
pub fn k_domination_number_with(g: &Graph, k: usize, opts: &DominationOptions) -> Result<KDomination> {
    let m = g.order();
    if m > opts.cap {
        return Err(Error::CapExceeded { what: "k_domination_number", cap: opts.cap, order: m });
    }
    let mut nodes = 0;
    for size in k.min(m)..=m {
        let mut search = SizedSearch { g, k, size, nodes: &mut nodes, budget: &opts.budget };
        if let Some(witness) = search.run(0, VertexSet::EMPTY, VertexSet::EMPTY)? {
            assert!(is_k_dominating(g, witness, k), "witness failed re-verification");
            return Ok(KDomination { value: witness.len(), witness, nodes_explored: nodes });
        }
    }
    unreachable!("the whole vertex set is k-dominating")
}

struct SizedSearch<'a> {
    g: &'a Graph,
    k: usize,
    size: usize,
    nodes: &'a mut u64,
    budget: &'a Budget,
}

impl SizedSearch<'_> {
    /// Vertices `< i` are decided: `chosen` is in the set, `excluded` is not.
    fn run(&mut self, i: usize, chosen: VertexSet, excluded: VertexSet) -> Result<Option<VertexSet>> {
        *self.nodes += 1;
        self.budget.tick(*self.nodes)?;
        let m = self.g.order();
        let undecided = self.g.vertices().difference(chosen).difference(excluded);
        let slots = self.size - chosen.len();
        // every excluded vertex must still be able to collect k neighbours
        let hopeless = excluded.iter().any(|u| {
            let n = self.g.neighbors(u);
            n.intersection(chosen).len() + n.intersection(undecided).len().min(slots) < self.k
        });
        if hopeless {
            return Ok(None);
        }
        if i == m {
            return Ok(Some(chosen));
        }
        if slots > 0 {
            if let Some(found) = self.run(i + 1, chosen.with(i), excluded)? {
                return Ok(Some(found));
            }
        }
        self.run(i + 1, chosen, excluded.with(i))
    }
}

/// Whether `γ_k(T_2n(W))` has the closed form: `k = 1`, or `1 < k <= n/2 - 1`.
pub fn family_formula_applies(n: usize, k: usize) -> bool {
    k == 1 || (k > 1 && k < n / 2)
}

/// `{x_1, x_3, .., x_{2k-1}} ∪ {x_2, x_4, .., x_{2k}}`: `k` pairwise
/// non-adjacent vertices from each parity class. For `k = 1` this is the
/// cross-parity pair `{x_1, x_2}`.
pub fn family_kdom_witness(n: usize, k: usize) -> Result<VertexSet> {
    check_family_parameter(n)?;
    if !family_formula_applies(n, k) {
        return Err(Error::DominationRange { n, k, max: n / 2 - 1 });
    }
    Ok((0..2 * k).collect())
}
