//! Backtracking isomorphism search for small graphs.
//!
//! Candidates are filtered by a per-vertex invariant (degree and the sorted
//! multiset of BFS distances) and by adjacency to the already-mapped prefix.

use std::collections::HashMap;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

type Invariant = (usize, Vec<u8>);

fn bfs_levels(g: &Graph, s: usize) -> Vec<u8> {
    let mut out = vec![u8::MAX; g.order()];
    out[s] = 0;
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
            out[u] = d;
        }
    }
    out
}

fn invariants(g: &Graph) -> Vec<Invariant> {
    (0..g.order())
        .map(|v| {
            let mut d = bfs_levels(g, v);
            d.sort_unstable();
            (g.degree(v), d)
        })
        .collect()
}

/// Checks that `map` is a bijection carrying the edge set of `g` onto that of `h`.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    let m = g.order();
    if h.order() != m || map.len() != m || g.edge_count() != h.edge_count() {
        return false;
    }
    let image: VertexSet = map.iter().copied().filter(|&w| w < m).collect();
    if image.len() != m {
        return false;
    }
    g.edges().all(|(u, v)| h.has_edge(map[u], map[v]))
}

/// Returns `map` with `map[v]` the image in `h` of vertex `v` of `g`, or `None`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let m = g.order();
    if h.order() != m || g.edge_count() != h.edge_count() {
        return None;
    }
    let (inv_g, inv_h) = (invariants(g), invariants(h));
    let mut class_of_g = Vec::with_capacity(m);
    let mut classes: HashMap<&Invariant, usize> = HashMap::new();
    let mut class_members: Vec<VertexSet> = Vec::new();
    for inv in &inv_h {
        let next = classes.len();
        let c = *classes.entry(inv).or_insert(next);
        if c == class_members.len() {
            class_members.push(VertexSet::EMPTY);
        }
    }
    for (w, inv) in inv_h.iter().enumerate() {
        class_members[classes[inv]].insert(w);
    }
    for inv in &inv_g {
        class_of_g.push(*classes.get(inv)?);
    }
    // invariant multisets must agree exactly
    let mut counts = vec![0isize; class_members.len()];
    for &c in &class_of_g {
        counts[c] += 1;
    }
    if counts.iter().zip(&class_members).any(|(&c, s)| c != s.len() as isize) {
        return None;
    }

    let order = search_order(g, &class_of_g, &class_members);
    let mut state = Search {
        g,
        h,
        order: &order,
        candidates: order.iter().map(|&v| class_members[class_of_g[v]]).collect(),
        map: vec![usize::MAX; m],
        used: VertexSet::EMPTY,
    };
    if !state.extend(0) {
        return None;
    }
    let map = state.map;
    debug_assert!(is_isomorphism(g, h, &map));
    is_isomorphism(g, h, &map).then_some(map)
}

/// Rarest class first, then greedily the vertex with most already-ordered neighbours.
fn search_order(g: &Graph, class_of: &[usize], members: &[VertexSet]) -> Vec<usize> {
    let m = g.order();
    let mut placed = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(m);
    while order.len() < m {
        let v = (0..m)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                (
                    g.neighbors(v).intersection(placed).len(),
                    std::cmp::Reverse(members[class_of[v]].len()),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        placed.insert(v);
        order.push(v);
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: &'a [usize],
    candidates: Vec<VertexSet>,
    map: Vec<usize>,
    used: VertexSet,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let mapped_nbrs = self.g.neighbors(v);
        for w in self.candidates[depth].difference(self.used) {
            let consistent = self.order[..depth].iter().all(|&u| {
                mapped_nbrs.contains(u) == self.h.has_edge(w, self.map[u])
            });
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used.insert(w);
            if self.extend(depth + 1) {
                return true;
            }
            self.used.remove(w);
            self.map[v] = usize::MAX;
        }
        false
    }
}
