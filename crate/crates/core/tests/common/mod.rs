//! Test-side oracles. They read a graph only through `has_edge` and `n`,
//! and recompute everything else from first principles.
#![allow(dead_code)]

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vtis_core::Graph;

pub fn adjacency_masks(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64);
    (0..g.n())
        .map(|u| {
            (0..g.n())
                .filter(|&v| g.has_edge(u, v))
                .fold(0, |m, v| m | 1 << v)
        })
        .collect()
}

/// Every independent set as a bitmask, by growing sets in increasing
/// vertex order.
pub fn all_independent_masks(g: &Graph) -> Vec<u64> {
    let adj = adjacency_masks(g);
    let mut out = vec![0u64];
    let mut frontier = vec![(0u64, 0usize)];
    while let Some((set, next)) = frontier.pop() {
        for (v, &row) in adj.iter().enumerate().skip(next) {
            if row & set == 0 {
                let grown = set | 1 << v;
                out.push(grown);
                frontier.push((grown, v + 1));
            }
        }
    }
    out
}

/// `(α, sorted maximum sets)` by exhaustive enumeration.
pub fn brute_mis(g: &Graph) -> (usize, Vec<Vec<usize>>) {
    let all = all_independent_masks(g);
    let alpha = all.iter().map(|m| m.count_ones()).max().unwrap_or(0) as usize;
    let mut sets: Vec<Vec<usize>> = all
        .into_iter()
        .filter(|m| m.count_ones() as usize == alpha)
        .map(|m| bits(m, g.n()))
        .collect();
    sets.sort();
    (alpha, sets)
}

pub fn bits(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

pub fn closed_nbhd_size(g: &Graph, set: &[usize]) -> usize {
    (0..g.n())
        .filter(|&v| set.contains(&v) || set.iter().any(|&a| g.has_edge(a, v)))
        .count()
}

pub fn is_independent(g: &Graph, set: &[usize]) -> bool {
    set.iter().all(|&a| set.iter().all(|&b| !g.has_edge(a, b)))
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Erdős–Rényi graph from a fixed seed.
pub fn random_graph(seed: u64, n: usize, density: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Whether `s ⊆ V(G×H)` equals `A × V(H)` or `V(G) × B` for independent
/// `A` or `B`, with vertex `(u, v)` at `u·|H| + v`.
pub fn is_product_preimage(s: &[usize], g: &Graph, h: &Graph) -> bool {
    let hn = h.n();
    let mut a: Vec<usize> = s.iter().map(|&x| x / hn).collect();
    let mut b: Vec<usize> = s.iter().map(|&x| x % hn).collect();
    a.sort_unstable();
    a.dedup();
    b.sort_unstable();
    b.dedup();
    (a.len() * hn == s.len() && is_independent(g, &a))
        || (b.len() * g.n() == s.len() && is_independent(h, &b))
}

/// Direct-product adjacency recomputed from the factors.
pub fn product_adjacent(g: &Graph, h: &Graph, x: usize, y: usize) -> bool {
    let hn = h.n();
    g.has_edge(x / hn, y / hn) && h.has_edge(x % hn, y % hn)
}
