//! Automorphism orbits by individualization-refinement.
//!
//! Two copies of the graph are refined side by side with a shared color
//! dictionary, so a color means the same thing on both sides. Mapping `u` to
//! `w` is possible iff individualizing `u` on the left and `w` on the right
//! can be driven to a discrete pair of partitions whose induced bijection
//! preserves edges. Found automorphisms are merged with a union-find.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const SYMMETRY_MAX_VERTICES: usize = 256;
const SEARCH_NODE_BUDGET: u64 = 2_000_000;

/// Vertex orbits of `Aut(G)`, each block sorted, blocks ordered by their
/// smallest vertex (the representative).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }
}

type Coloring = Vec<u32>;

struct Search<'g> {
    g: &'g Graph,
    nodes: u64,
}

impl Search<'_> {
    /// Refines both colorings to a common stable state. `None` when the two
    /// sides stop being compatible.
    fn refine(&self, mut left: Coloring, mut right: Coloring) -> Option<(Coloring, Coloring)> {
        let n = self.g.n();
        let mut classes = count_classes(&left);
        loop {
            let signature = |c: &Coloring, v: usize| {
                let mut around: Vec<u32> = self.g.neighbors(v).iter().map(|w| c[w]).collect();
                around.sort_unstable();
                (c[v], around)
            };
            let sl: Vec<_> = (0..n).map(|v| signature(&left, v)).collect();
            let sr: Vec<_> = (0..n).map(|v| signature(&right, v)).collect();
            let mut dictionary = BTreeMap::new();
            for s in sl.iter().chain(&sr) {
                dictionary.entry(s.clone()).or_insert(0u32);
            }
            for (id, slot) in dictionary.values_mut().enumerate() {
                *slot = id as u32;
            }
            let nl: Coloring = sl.iter().map(|s| dictionary[s]).collect();
            let nr: Coloring = sr.iter().map(|s| dictionary[s]).collect();
            if histogram(&nl) != histogram(&nr) {
                return None;
            }
            let refined = count_classes(&nl);
            left = nl;
            right = nr;
            if refined == classes {
                return Some((left, right));
            }
            classes = refined;
        }
    }

    fn extend(&mut self, left: Coloring, right: Coloring) -> Result<Option<Vec<usize>>> {
        self.nodes += 1;
        if self.nodes > SEARCH_NODE_BUDGET {
            return Err(Error::resource(format!(
                "automorphism search exceeded {SEARCH_NODE_BUDGET} nodes"
            )));
        }
        let Some((left, right)) = self.refine(left, right) else {
            return Ok(None);
        };
        let n = self.g.n();
        let hist = histogram(&left);
        let target = hist
            .iter()
            .filter(|(_, &size)| size > 1)
            .min_by_key(|(&c, &size)| (size, c));
        let Some((&color, _)) = target else {
            let mut by_color = vec![0; n];
            for v in 0..n {
                by_color[right[v] as usize] = v;
            }
            let map: Vec<usize> = (0..n).map(|v| by_color[left[v] as usize]).collect();
            let preserves = self
                .g
                .edges()
                .iter()
                .all(|&(u, v)| self.g.has_edge(map[u], map[v]));
            return Ok(preserves.then_some(map));
        };
        let fresh = n as u32 + 1;
        let a = (0..n).find(|&v| left[v] == color).unwrap();
        for b in (0..n).filter(|&v| right[v] == color) {
            let mut l = left.clone();
            let mut r = right.clone();
            l[a] = fresh;
            r[b] = fresh;
            if let Some(map) = self.extend(l, r)? {
                return Ok(Some(map));
            }
        }
        Ok(None)
    }
}

fn histogram(c: &Coloring) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for &x in c {
        *h.entry(x).or_insert(0) += 1;
    }
    h
}

fn count_classes(c: &Coloring) -> usize {
    histogram(c).len()
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        parent[hi] = lo;
    }
}

/// Exact orbit partition of the automorphism group.
pub fn automorphism_orbits(g: &Graph) -> Result<OrbitPartition> {
    let n = g.n();
    if n > SYMMETRY_MAX_VERTICES {
        return Err(Error::resource(format!(
            "automorphism search limited to {SYMMETRY_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let mut search = Search { g, nodes: 0 };
    let zero = vec![0; n];
    let (base, _) = search
        .refine(zero.clone(), zero)
        .expect("a graph is compatible with itself");
    let mut parent: Vec<usize> = (0..n).collect();
    for u in 0..n {
        // Only the smallest member of each provisional class searches.
        if (0..u).any(|v| find(&mut parent, v) == find(&mut parent, u)) {
            continue;
        }
        for w in (u + 1)..n {
            if base[w] != base[u] || find(&mut parent, w) == find(&mut parent, u) {
                continue;
            }
            let fresh = n as u32 + 1;
            let mut l = base.clone();
            let mut r = base.clone();
            l[u] = fresh;
            r[w] = fresh;
            if let Some(map) = search.extend(l, r)? {
                for (v, &image) in map.iter().enumerate() {
                    union(&mut parent, v, image);
                }
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let root = find(&mut parent, v);
        blocks.entry(root).or_default().push(v);
    }
    Ok(OrbitPartition {
        blocks: blocks.into_values().collect(),
    })
}

/// A constructor certificate answers immediately; otherwise the orbit
/// search decides.
pub fn is_vertex_transitive(g: &Graph) -> Result<bool> {
    if g.certificates().vertex_transitive || g.n() <= 1 {
        return Ok(true);
    }
    Ok(automorphism_orbits(g)?.len() == 1)
}
