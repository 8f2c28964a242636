//! Exhaustive reference implementation for validating the main solver.
//! It shares nothing with the branch and bound beyond the graph type.

use super::MisFamily;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const ORACLE_MAX_VERTICES: usize = 24;

fn masks(g: &Graph) -> Result<Vec<u32>> {
    if g.n() > ORACLE_MAX_VERTICES {
        return Err(Error::argument(format!(
            "brute-force oracle handles at most {ORACLE_MAX_VERTICES} vertices, got {}",
            g.n()
        )));
    }
    Ok((0..g.n())
        .map(|u| {
            (0..g.n())
                .filter(|&v| g.has_edge(u, v))
                .fold(0u32, |m, v| m | 1 << v)
        })
        .collect())
}

// Include/exclude every vertex in index order; a branch is cut only when
// the included vertex has a neighbor already chosen.
fn scan(adj: &[u32], v: usize, chosen: u32, size: usize, best: &mut usize, all: &mut Vec<u32>) {
    if v == adj.len() {
        if size > *best {
            *best = size;
            all.clear();
        }
        if size == *best {
            all.push(chosen);
        }
        return;
    }
    if adj[v] & chosen == 0 {
        scan(adj, v + 1, chosen | 1 << v, size + 1, best, all);
    }
    scan(adj, v + 1, chosen, size, best, all);
}

pub fn brute_force_mis(g: &Graph) -> Result<MisFamily> {
    let adj = masks(g)?;
    let mut best = 0;
    let mut all = Vec::new();
    scan(&adj, 0, 0, 0, &mut best, &mut all);
    let sets = all
        .into_iter()
        .map(|m| VertexSet::from_sorted(g.n(), (0..g.n()).filter(|&v| m >> v & 1 == 1).collect()))
        .collect();
    Ok(MisFamily::new(best, sets))
}

pub fn brute_force_alpha(g: &Graph) -> Result<usize> {
    Ok(brute_force_mis(g)?.alpha)
}
