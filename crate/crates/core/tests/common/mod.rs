//! Independent brute-force oracles and graph corpora shared by the
//! integration tests. Nothing here calls into the solvers it checks.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toeplitz_core::Graph;

/// Floyd–Warshall distances; `None` if disconnected.
pub fn floyd_distances(g: &Graph) -> Option<Vec<Vec<u32>>> {
    let m = g.order();
    let inf = u32::MAX / 2;
    let mut d = vec![vec![inf; m]; m];
    for (u, row) in d.iter_mut().enumerate() {
        for (v, slot) in row.iter_mut().enumerate() {
            if u == v {
                *slot = 0;
            } else if g.has_edge(u, v) {
                *slot = 1;
            }
        }
    }
    for k in 0..m {
        for i in 0..m {
            for j in 0..m {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d.iter().flatten().all(|&x| x < inf).then_some(d)
}

/// Distances read off the boolean powers of `I + A`: `d(u, v)` is the
/// first exponent at which `u` reaches `v`.
pub fn matrix_power_distances(g: &Graph) -> Option<Vec<Vec<u32>>> {
    let m = g.order();
    let step: Vec<Vec<bool>> = (0..m)
        .map(|u| (0..m).map(|v| u == v || g.has_edge(u, v)).collect())
        .collect();
    let mut reach: Vec<Vec<bool>> = (0..m).map(|u| (0..m).map(|v| u == v).collect()).collect();
    let mut d = vec![vec![u32::MAX; m]; m];
    for t in 0..=m as u32 {
        for u in 0..m {
            for v in 0..m {
                if reach[u][v] && d[u][v] == u32::MAX {
                    d[u][v] = t;
                }
            }
        }
        let mut next = vec![vec![false; m]; m];
        for u in 0..m {
            for w in 0..m {
                if reach[u][w] {
                    for v in 0..m {
                        next[u][v] |= step[w][v];
                    }
                }
            }
        }
        reach = next;
    }
    d.iter().flatten().all(|&x| x != u32::MAX).then_some(d)
}

fn all_distinct<T: Eq + std::hash::Hash>(items: impl IntoIterator<Item = T>) -> bool {
    let mut seen = HashSet::new();
    items.into_iter().all(|x| seen.insert(x))
}

pub fn naive_resolves_set(d: &[Vec<u32>], set: &[usize]) -> bool {
    all_distinct((0..d.len()).map(|v| set.iter().map(|&s| d[v][s]).collect::<Vec<_>>()))
}

/// Minimum resolving set size over all subsets, no pruning.
pub fn brute_metric_dimension(g: &Graph) -> usize {
    let d = floyd_distances(g).expect("connected");
    let m = g.order();
    (0u32..1 << m)
        .filter(|&mask| {
            let set: Vec<usize> = (0..m).filter(|&v| mask >> v & 1 == 1).collect();
            naive_resolves_set(&d, &set)
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

/// `r(v|Σ)` recomputed from scratch.
pub fn naive_representation(d: &[Vec<u32>], assignment: &[usize], k: usize, v: usize) -> Vec<u32> {
    (0..k)
        .map(|p| {
            (0..d.len())
                .filter(|&u| assignment[u] == p)
                .map(|u| d[v][u])
                .min()
                .unwrap()
        })
        .collect()
}

pub fn naive_resolves_partition(d: &[Vec<u32>], assignment: &[usize]) -> bool {
    let m = d.len();
    let k = assignment.iter().max().unwrap() + 1;
    let mut reps = vec![vec![u32::MAX; k]; m];
    for (v, rep) in reps.iter_mut().enumerate() {
        for u in 0..m {
            let slot = &mut rep[assignment[u]];
            *slot = (*slot).min(d[v][u]);
        }
    }
    all_distinct(reps)
}

/// Every restricted-growth string of length `m` (all set partitions).
pub fn for_each_set_partition(m: usize, mut f: impl FnMut(&[usize])) {
    fn rec(a: &mut Vec<usize>, m: usize, max: usize, f: &mut dyn FnMut(&[usize])) {
        if a.len() == m {
            f(a);
            return;
        }
        for p in 0..=max {
            a.push(p);
            rec(a, m, max.max(p + 1), f);
            a.pop();
        }
    }
    rec(&mut Vec::with_capacity(m), m, 0, &mut f);
}

/// Restricted-growth strings with exactly `k` parts.
pub fn set_partitions_with_k(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_set_partition(m, |a| {
        if a.iter().max().map_or(0, |x| x + 1) == k {
            out.push(a.to_vec());
        }
    });
    out
}

/// Minimum number of parts in a resolving partition, over all set partitions.
pub fn brute_partition_dimension(g: &Graph) -> usize {
    let d = floyd_distances(g).expect("connected");
    let mut best = usize::MAX;
    for_each_set_partition(g.order(), |a| {
        let k = a.iter().max().unwrap() + 1;
        if k < best && naive_resolves_partition(&d, a) {
            best = k;
        }
    });
    best
}

pub fn naive_k_dominating(g: &Graph, mask: u64, k: usize) -> bool {
    (0..g.order())
        .filter(|&v| mask >> v & 1 == 0)
        .all(|v| (0..g.order()).filter(|&u| mask >> u & 1 == 1 && g.has_edge(u, v)).count() >= k)
}

pub fn brute_k_domination(g: &Graph, k: usize) -> usize {
    (0u64..1 << g.order())
        .filter(|&mask| naive_k_dominating(g, mask, k))
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

/// `det(xI - A)` by summing over all permutations; ascending coefficients.
pub fn permutation_char_poly(g: &Graph) -> Vec<i64> {
    let m = g.order();
    let mut coeffs = vec![0i64; m + 1];
    let mut perm: Vec<usize> = (0..m).collect();
    fn rec(i: usize, perm: &mut Vec<usize>, sign: i64, g: &Graph, coeffs: &mut [i64]) {
        let m = perm.len();
        if i == m {
            // fixed points contribute x (the diagonal of A is zero)
            let mut fixed = 0;
            for (r, &c) in perm.iter().enumerate() {
                if r == c {
                    fixed += 1;
                } else if !g.has_edge(r, c) {
                    return;
                }
            }
            let moved = (m - fixed) as u32;
            coeffs[fixed] += sign * (-1i64).pow(moved);
            return;
        }
        for j in i..m {
            perm.swap(i, j);
            rec(i + 1, perm, if i == j { sign } else { -sign }, g, coeffs);
            perm.swap(i, j);
        }
    }
    rec(0, &mut perm, 1, g, &mut coeffs);
    coeffs
}

pub fn triangle_count(g: &Graph) -> usize {
    let m = g.order();
    let mut t = 0;
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    t += 1;
                }
            }
        }
    }
    t
}

/// Independent edge-set check of a claimed isomorphism.
pub fn verify_mapping(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    let m = g.order();
    if map.len() != m || h.order() != m {
        return false;
    }
    let image: BTreeSet<usize> = map.iter().copied().collect();
    if image.len() != m || image.iter().any(|&w| w >= m) {
        return false;
    }
    (0..m).all(|u| (0..m).all(|v| g.has_edge(u, v) == h.has_edge(map[u], map[v])))
}

fn edge_code(m: usize, adj: &[u32], perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for i in 0..m {
        for j in i + 1..m {
            code = code << 1 | (adj[perm[i]] >> perm[j] & 1) as u64;
        }
    }
    code
}

/// Canonical code: the least edge code over vertex orders sorted by degree.
fn canonical_code(m: usize, adj: &[u32]) -> u64 {
    let mut by_degree: Vec<usize> = (0..m).collect();
    by_degree.sort_by_key(|&v| adj[v].count_ones());
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=m {
        if i == m || adj[by_degree[i]].count_ones() != adj[by_degree[start]].count_ones() {
            blocks.push((start, i));
            start = i;
        }
    }
    let mut best = u64::MAX;
    fn permute_blocks(
        blocks: &[(usize, usize)],
        b: usize,
        perm: &mut Vec<usize>,
        m: usize,
        adj: &[u32],
        best: &mut u64,
    ) {
        if b == blocks.len() {
            *best = (*best).min(edge_code(m, adj, perm));
            return;
        }
        let (lo, hi) = blocks[b];
        heap_permute(perm, lo, hi - lo, &mut |p| permute_blocks(blocks, b + 1, p, m, adj, best));
    }
    fn heap_permute(perm: &mut Vec<usize>, lo: usize, k: usize, f: &mut dyn FnMut(&mut Vec<usize>)) {
        if k <= 1 {
            f(perm);
            return;
        }
        for i in 0..k {
            heap_permute(perm, lo, k - 1, f);
            let j = if k.is_multiple_of(2) { lo + i } else { lo };
            if i + 1 < k {
                perm.swap(j, lo + k - 1);
            }
        }
    }
    permute_blocks(&blocks, 0, &mut by_degree, m, adj, &mut best);
    best
}

/// All graphs on `m` vertices up to isomorphism, as adjacency bitmasks.
pub fn all_graphs(m: usize) -> Vec<Vec<u32>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for base in all_graphs(m - 1) {
        for nbrs in 0u32..1 << (m - 1) {
            let mut adj = base.clone();
            adj.push(nbrs);
            for (v, row) in adj.iter_mut().enumerate().take(m - 1) {
                if nbrs >> v & 1 == 1 {
                    *row |= 1 << (m - 1);
                }
            }
            if seen.insert(canonical_code(m, &adj)) {
                out.push(adj);
            }
        }
    }
    out
}

pub fn graph_from_masks(adj: &[u32]) -> Graph {
    let m = adj.len();
    let edges = (0..m).flat_map(|u| (u + 1..m).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v)));
    Graph::from_edges(m, edges).unwrap()
}

/// Connected graphs with `1..=max_order` vertices, one per isomorphism class.
pub fn connected_corpus(max_order: usize) -> Vec<Graph> {
    (1..=max_order)
        .flat_map(all_graphs)
        .map(|adj| graph_from_masks(&adj))
        .filter(|g| g.is_connected())
        .collect()
}

pub fn random_connected(rng: &mut ChaCha8Rng, order: usize) -> Graph {
    loop {
        let p: f64 = rng.gen_range(0.2..0.7);
        let mut edges = Vec::new();
        for u in 0..order {
            for v in u + 1..order {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(order, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Fixed-seed sample of connected graphs with orders drawn from `orders`.
pub fn random_corpus(seed: u64, count: usize, orders: std::ops::RangeInclusive<usize>) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let m = rng.gen_range(orders.clone());
            random_connected(&mut rng, m)
        })
        .collect()
}

/// Connected graphs on `1..=max_order` vertices: a random spanning tree plus
/// random extra edges.
pub fn arb_connected(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|m| {
        (
            prop::collection::vec(any::<usize>(), m),
            prop::collection::vec(prop::bool::weighted(0.35), m * (m - 1) / 2),
        )
            .prop_map(move |(parents, extra)| {
                let mut edges: Vec<(usize, usize)> = (1..m).map(|v| (parents[v] % v, v)).collect();
                let mut i = 0;
                for u in 0..m {
                    for v in u + 1..m {
                        if extra[i] {
                            edges.push((u, v));
                        }
                        i += 1;
                    }
                }
                Graph::from_edges(m, edges).unwrap()
            })
    })
}
