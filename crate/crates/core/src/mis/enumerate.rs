use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Lexicographic stream of every independent set with at most `max_size`
/// members, starting with the empty set. Each yielded set costs one unit of
/// budget; running out yields a single resource error and ends the stream.
pub struct IndependentSets<'g> {
    graph: &'g Graph,
    max_size: usize,
    chosen: Vec<usize>,
    // `frontier[d]` holds the untried extensions at depth `d`.
    frontier: Vec<BitSet>,
    started: bool,
    finished: bool,
    remaining: u64,
}

impl<'g> IndependentSets<'g> {
    fn with_root(graph: &'g Graph, max_size: usize, root: BitSet, budget: u64) -> Self {
        IndependentSets {
            graph,
            max_size,
            chosen: Vec::new(),
            frontier: vec![root],
            started: false,
            finished: false,
            remaining: budget,
        }
    }

    pub fn new(graph: &'g Graph, max_size: usize, budget: u64) -> Self {
        Self::with_root(graph, max_size, BitSet::full(graph.n()), budget)
    }

    /// Only sets whose smallest member is `first` (plus the empty set).
    pub(crate) fn starting_at(
        graph: &'g Graph,
        max_size: usize,
        first: usize,
        budget: u64,
    ) -> Self {
        Self::with_root(
            graph,
            max_size,
            BitSet::from_indices(graph.n(), [first]),
            budget,
        )
    }

    fn emit(&mut self) -> Option<Result<VertexSet>> {
        if self.remaining == 0 {
            self.finished = true;
            return Some(Err(Error::resource(
                "independent-set enumeration budget exhausted",
            )));
        }
        self.remaining -= 1;
        let mut members = self.chosen.clone();
        members.sort_unstable();
        Some(Ok(VertexSet::from_sorted(self.graph.n(), members)))
    }
}

impl Iterator for IndependentSets<'_> {
    type Item = Result<VertexSet>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.finished {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.max_size == 0 {
                self.finished = true;
            }
            return self.emit();
        }
        loop {
            let depth = self.chosen.len();
            if depth < self.max_size {
                if let Some(v) = self.frontier[depth].first() {
                    self.frontier[depth].remove(v);
                    let mut next = self.frontier[depth].clone();
                    if depth == 0 {
                        // The root frontier may be restricted; extensions may use any later vertex.
                        next = BitSet::full(self.graph.n());
                        for w in 0..=v {
                            next.remove(w);
                        }
                    }
                    next.difference_with(self.graph.neighbors(v));
                    self.chosen.push(v);
                    self.frontier.push(next);
                    return self.emit();
                }
            }
            if depth == 0 {
                self.finished = true;
                return None;
            }
            self.chosen.pop();
            self.frontier.pop();
        }
    }
}

pub fn enumerate_independent_sets(g: &Graph, max_size: usize, budget: u64) -> IndependentSets<'_> {
    IndependentSets::new(g, max_size, budget)
}
