//! Immutable simple graphs over `0..n`, vertex sets, and neighborhood operators.

mod families;
pub mod io;

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

pub use families::{
    cayley_graph, cayley_zn, circular_graph, complete_graph, cycle_graph, direct_product,
    disjoint_union, edgeless_graph, kneser_graph, permutation_graph,
};

/// Upper bound on the vertex count of any graph the engine will build.
pub const VERTEX_CAP: usize = 4096;

pub(crate) fn check_cap(n: u128, what: &str) -> Result<usize> {
    if n > VERTEX_CAP as u128 {
        Err(Error::resource(format!(
            "{what} would have {n} vertices, above the cap of {VERTEX_CAP}"
        )))
    } else {
        Ok(n as usize)
    }
}

/// Facts about a graph that a constructor proved while building it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Certificates {
    pub vertex_transitive: bool,
    pub bipartite: bool,
    pub connected: bool,
}

impl Certificates {
    pub const VERTEX_TRANSITIVE: &'static str = "vertex_transitive_by_construction";
    pub const BIPARTITE: &'static str = "bipartite";
    pub const CONNECTED: &'static str = "connected";

    pub fn names(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.vertex_transitive {
            out.push(Self::VERTEX_TRANSITIVE);
        }
        if self.bipartite {
            out.push(Self::BIPARTITE);
        }
        if self.connected {
            out.push(Self::CONNECTED);
        }
        out
    }

    pub fn is_known_name(name: &str) -> bool {
        matches!(
            name,
            Self::VERTEX_TRANSITIVE | Self::BIPARTITE | Self::CONNECTED
        )
    }
}

/// Position of a product vertex in its two factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProductLabel {
    pub left: usize,
    pub right: usize,
}

impl ProductLabel {
    pub fn flatten(self, right_order: usize) -> usize {
        self.left * right_order + self.right
    }

    pub fn unflatten(index: usize, right_order: usize) -> Self {
        ProductLabel {
            left: index / right_order,
            right: index % right_order,
        }
    }
}

/// Combinatorial meaning of a vertex. Subsets and permutations use `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Label {
    Subset(Vec<usize>),
    Ring(usize),
    Permutation(Vec<usize>),
    Product(ProductLabel),
}

#[derive(Clone)]
pub struct Graph {
    n: usize,
    rows: Vec<BitSet>,
    labels: Option<Vec<Label>>,
    certificates: Certificates,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edge_count())
            .field("certificates", &self.certificates.names())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an undirected edge list. Orientation is ignored;
    /// loops, duplicates and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        check_cap(n as u128, "edge-list graph")?;
        let mut rows = vec![BitSet::new(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::argument(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::argument(format!("loop at vertex {u}")));
            }
            if rows[u].contains(v) {
                return Err(Error::argument(format!("duplicate edge ({u},{v})")));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph {
            n,
            rows,
            labels: None,
            certificates: Certificates::default(),
        })
    }

    /// Internal constructor for builders that produce symmetric rows.
    pub(crate) fn from_rows(rows: Vec<BitSet>, labels: Option<Vec<Label>>) -> Graph {
        let n = rows.len();
        debug_assert!(rows.iter().enumerate().all(|(u, r)| {
            r.capacity() == n && !r.contains(u) && r.iter().all(|v| rows[v].contains(u))
        }));
        debug_assert!(labels.as_ref().is_none_or(|l| l.len() == n));
        Graph {
            n,
            rows,
            labels,
            certificates: Certificates::default(),
        }
    }

    pub(crate) fn with_labels(mut self, labels: Option<Vec<Label>>) -> Result<Graph> {
        if let Some(l) = &labels {
            if l.len() != self.n {
                return Err(Error::argument(format!(
                    "label list has {} entries for {} vertices",
                    l.len(),
                    self.n
                )));
            }
            let distinct: HashSet<&Label> = l.iter().collect();
            if distinct.len() != l.len() {
                return Err(Error::argument("labels are not pairwise distinct"));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    /// Records structural certificates established by exhaustive search
    /// plus the caller's vertex-transitivity proof.
    pub(crate) fn certify(mut self, vertex_transitive: bool) -> Graph {
        self.certificates = Certificates {
            vertex_transitive,
            bipartite: self.is_bipartite(),
            connected: self.is_connected(),
        };
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn certificates(&self) -> Certificates {
        self.certificates
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Common degree if the graph is regular; `None` for irregular graphs
    /// and the empty graph.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            Some(&first) if d.iter().all(|&x| x == first) => Some(first),
            _ => None,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.rows[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet {
            universe: self.n,
            members: (0..self.n).collect(),
        }
    }

    pub fn vertex_set(&self, members: impl IntoIterator<Item = usize>) -> Result<VertexSet> {
        VertexSet::new(self.n, members)
    }

    fn owned(&self, set: &VertexSet) -> Result<()> {
        if set.universe != self.n {
            return Err(Error::argument(format!(
                "vertex set over {} vertices used with a graph on {}",
                set.universe, self.n
            )));
        }
        Ok(())
    }

    /// `N(A)`: every vertex adjacent to some member of `A`.
    pub fn open_neighborhood(&self, set: &VertexSet) -> Result<VertexSet> {
        self.owned(set)?;
        let mut acc = BitSet::new(self.n);
        for &a in set.iter() {
            acc.union_with(&self.rows[a]);
        }
        Ok(VertexSet::from_bitset(&acc))
    }

    /// `N[A] = N(A) ∪ A`.
    pub fn closed_neighborhood(&self, set: &VertexSet) -> Result<VertexSet> {
        self.owned(set)?;
        Ok(VertexSet::from_bitset(&self.closed_neighborhood_bits(set)))
    }

    /// `V \ N[A]`.
    pub fn external_complement(&self, set: &VertexSet) -> Result<VertexSet> {
        self.owned(set)?;
        let mut rest = BitSet::full(self.n);
        rest.difference_with(&self.closed_neighborhood_bits(set));
        Ok(VertexSet::from_bitset(&rest))
    }

    pub(crate) fn closed_neighborhood_bits(&self, set: &VertexSet) -> BitSet {
        let mut acc = BitSet::new(self.n);
        for &a in set.iter() {
            acc.union_with(&self.rows[a]);
            acc.insert(a);
        }
        acc
    }

    pub(crate) fn closed_neighborhood_size(&self, set: &VertexSet) -> usize {
        self.closed_neighborhood_bits(set).count()
    }

    /// True iff no edge joins two members. The empty set is independent.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        if set.universe != self.n {
            return false;
        }
        let bits = set.to_bitset();
        set.iter().all(|&a| !self.rows[a].intersects(&bits))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.rows[u].iter() {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The graph with no vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Proper 2-coloring by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in self.rows[u].iter() {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Copy with one edge removed. The result carries no certificates.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return Err(Error::argument(format!("no edge ({u},{v}) to delete")));
        }
        let mut rows = self.rows.clone();
        rows[u].remove(v);
        rows[v].remove(u);
        Ok(Graph::from_rows(rows, self.labels.clone()))
    }
}

/// Strictly increasing list of vertices of one graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    universe: usize,
    members: Vec<usize>,
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.members).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(s)
    }
}

impl VertexSet {
    /// Sorts and validates; duplicates and out-of-range indices are errors.
    pub fn new(universe: usize, members: impl IntoIterator<Item = usize>) -> Result<VertexSet> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::argument(format!("vertex {} listed twice", w[0])));
        }
        if let Some(&last) = members.last() {
            if last >= universe {
                return Err(Error::argument(format!(
                    "vertex {last} is not in a graph on {universe} vertices"
                )));
            }
        }
        Ok(VertexSet { universe, members })
    }

    pub fn empty(universe: usize) -> VertexSet {
        VertexSet {
            universe,
            members: Vec::new(),
        }
    }

    pub(crate) fn from_sorted(universe: usize, members: Vec<usize>) -> VertexSet {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.last().is_none_or(|&m| m < universe));
        VertexSet { universe, members }
    }

    pub(crate) fn from_bitset(bits: &BitSet) -> VertexSet {
        VertexSet {
            universe: bits.capacity(),
            members: bits.iter().collect(),
        }
    }

    pub fn to_bitset(&self) -> BitSet {
        BitSet::from_indices(self.universe, self.members.iter().copied())
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.members.iter()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.members.iter().filter(|&&v| other.contains(v)).count()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}
