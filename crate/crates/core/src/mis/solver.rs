//! Branch and bound over independent sets with a greedy clique-cover bound.
//!
//! Vertices are relabeled once into a static order (degree descending,
//! original index breaking ties). At every node the candidate set is
//! partitioned greedily into cliques of `G`; a candidate covered by the
//! first `k` cliques can extend the current set by at most `k`, which is
//! the same bound as greedy coloring of the complement in a clique search.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use super::{MisFamily, SearchLimits};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

struct Problem {
    /// `order[new] = old`.
    order: Vec<usize>,
    adj: Vec<BitSet>,
    nonadj: Vec<BitSet>,
}

impl Problem {
    fn new(g: &Graph) -> Problem {
        let n = g.n();
        let degrees = g.degrees();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then(a.cmp(&b)));
        let mut position = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let adj: Vec<BitSet> = order
            .iter()
            .map(|&old| BitSet::from_indices(n, g.neighbors(old).iter().map(|w| position[w])))
            .collect();
        let nonadj = adj
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut s = BitSet::full(n);
                s.difference_with(row);
                s.remove(v);
                s
            })
            .collect();
        Problem { order, adj, nonadj }
    }

    fn n(&self) -> usize {
        self.order.len()
    }

    /// Candidates paired with their clique-cover bound, in processing order
    /// (largest bound first).
    fn cover(&self, candidates: &BitSet) -> Vec<(usize, usize)> {
        let mut uncovered = candidates.clone();
        let mut out = Vec::with_capacity(candidates.count());
        let mut k = 0;
        while !uncovered.is_empty() {
            k += 1;
            let mut open = uncovered.clone();
            while let Some(v) = open.first() {
                open.intersect_with(&self.adj[v]);
                uncovered.remove(v);
                out.push((v, k));
            }
        }
        out.reverse();
        out
    }

    fn to_original(&self, members: &[usize]) -> VertexSet {
        let mut old: Vec<usize> = members.iter().map(|&v| self.order[v]).collect();
        old.sort_unstable();
        VertexSet::from_sorted(self.n(), old)
    }

    fn greedy_lower_bound(&self) -> usize {
        let mut candidates = BitSet::full(self.n());
        let mut size = 0;
        // Static order puts high degree first, so scan from the back.
        while let Some(v) = candidates.iter().last() {
            size += 1;
            candidates.intersect_with(&self.nonadj[v]);
        }
        size
    }
}

struct Counter<'a> {
    nodes: &'a AtomicU64,
    budget: u64,
}

impl Counter<'_> {
    #[inline]
    fn tick(&self) -> Result<()> {
        let used = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if used > self.budget {
            Err(Error::resource(format!(
                "branch-and-bound node budget of {} exhausted",
                self.budget
            )))
        } else {
            Ok(())
        }
    }
}

fn maximize(
    p: &Problem,
    counter: &Counter<'_>,
    current: usize,
    mut candidates: BitSet,
    best: &mut usize,
) -> Result<()> {
    counter.tick()?;
    if current > *best {
        *best = current;
    }
    for (v, bound) in p.cover(&candidates) {
        if current + bound <= *best {
            return Ok(());
        }
        let next = candidates.intersection(&p.nonadj[v]);
        maximize(p, counter, current + 1, next, best)?;
        candidates.remove(v);
    }
    Ok(())
}

/// Exact `α(G)`. Exceeding the node budget is an error, never a guess.
pub fn independence_number(g: &Graph, limits: &SearchLimits) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    let p = Problem::new(g);
    let nodes = AtomicU64::new(0);
    let counter = Counter {
        nodes: &nodes,
        budget: limits.node_budget,
    };
    let mut best = p.greedy_lower_bound();
    maximize(&p, &counter, 0, BitSet::full(p.n()), &mut best)?;
    Ok(best)
}

struct Collector<'a> {
    found: &'a AtomicUsize,
    budget: usize,
}

fn collect(
    p: &Problem,
    counter: &Counter<'_>,
    sink: &Collector<'_>,
    target: usize,
    chosen: &mut Vec<usize>,
    mut candidates: BitSet,
    out: &mut Vec<VertexSet>,
) -> Result<()> {
    counter.tick()?;
    if chosen.len() == target {
        let total = sink.found.fetch_add(1, Ordering::Relaxed) + 1;
        if total > sink.budget {
            return Err(Error::resource(format!(
                "family budget of {} sets exceeded ({} maximum sets found so far)",
                sink.budget,
                total - 1
            )));
        }
        out.push(p.to_original(chosen));
        return Ok(());
    }
    for (v, bound) in p.cover(&candidates) {
        if chosen.len() + bound < target {
            return Ok(());
        }
        let next = candidates.intersection(&p.nonadj[v]);
        chosen.push(v);
        let r = collect(p, counter, sink, target, chosen, next, out);
        chosen.pop();
        r?;
        candidates.remove(v);
    }
    Ok(())
}

/// The complete family of maximum independent sets in canonical order.
///
/// Root branches are independent once `α` is known, so they run on a
/// worker pool; the result is sorted before it is returned, which makes it
/// identical for every thread count.
pub fn enumerate_maximum_independent_sets(g: &Graph, limits: &SearchLimits) -> Result<MisFamily> {
    let alpha = independence_number(g, limits)?;
    if g.n() == 0 {
        return Ok(MisFamily::new(0, vec![VertexSet::empty(0)]));
    }
    let p = Problem::new(g);
    let nodes = AtomicU64::new(0);
    let found = AtomicUsize::new(0);
    let counter = Counter {
        nodes: &nodes,
        budget: limits.node_budget,
    };
    let sink = Collector {
        found: &found,
        budget: limits.family_budget,
    };

    let mut remaining = BitSet::full(p.n());
    let mut branches = Vec::new();
    for (v, bound) in p.cover(&remaining.clone()) {
        if bound < alpha {
            break;
        }
        branches.push((v, remaining.intersection(&p.nonadj[v])));
        remaining.remove(v);
    }

    let run = |(v, candidates): (usize, BitSet)| -> Result<Vec<VertexSet>> {
        let mut out = Vec::new();
        let mut chosen = vec![v];
        collect(
            &p,
            &counter,
            &sink,
            alpha,
            &mut chosen,
            candidates,
            &mut out,
        )?;
        Ok(out)
    };

    let parts: Result<Vec<Vec<VertexSet>>> = if limits.threads == 1 {
        branches.into_iter().map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(limits.threads)
            .build()
            .map_err(|e| Error::resource(format!("cannot start worker pool: {e}")))?;
        pool.install(|| branches.into_par_iter().map(run).collect())
    };
    let sets = parts?.into_iter().flatten().collect();
    Ok(MisFamily::new(alpha, sets))
}
