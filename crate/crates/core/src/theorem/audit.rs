//! Fiber decomposition of a maximum independent set of `G×H`.
//!
//! For `S ⊆ V(G)×V(H)` and `a ∈ V(G)` the fiber is `X_a = {x : (a,x) ∈ S}`.
//! It splits into the part `X*_a` with no neighbor inside `X_a` and the
//! rest `X'_a`. Distinct `X*_a` values `Y_1..Y_k` partition `V(G)` into
//! blocks `B_i`, and each `x ∈ X' = ∪ X'_a` has an index set
//! `A_x = {a : x ∈ X'_a}`. The audit rebuilds all of these and checks the
//! counting identity, the four inequalities that bound `|S|` by `α(G)|H|`,
//! and the equality pattern a maximum `S` forces on every inequality.

use serde::Serialize;
use serde_json::json;

use super::{require_vertex_transitive, FactorFacts};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{direct_product, Graph, VertexSet};
use crate::mis::{independence_number, SearchLimits};

/// Classification of an independent set `A` against a vertex-transitive graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SetKind {
    Empty,
    Maximum,
    Imprimitive,
    /// Ratio strictly below the graph's independence ratio.
    Strict,
}

fn kind(size: usize, closed: usize, alpha: usize, order: usize) -> SetKind {
    if size == 0 {
        SetKind::Empty
    } else if size == alpha {
        SetKind::Maximum
    } else if size as u128 * order as u128 == alpha as u128 * closed as u128 {
        SetKind::Imprimitive
    } else {
        SetKind::Strict
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Fiber {
    pub a: usize,
    pub all: VertexSet,
    pub star: VertexSet,
    pub prime: VertexSet,
}

#[derive(Clone, Debug, Serialize)]
pub struct Block {
    /// `Y_i`, a subset of `V(H)`.
    pub y: VertexSet,
    /// `B_i`, a subset of `V(G)`.
    pub b: VertexSet,
    pub y_closed_nbhd_size: usize,
    pub y_kind: SetKind,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndexSet {
    pub x: usize,
    pub a_x: VertexSet,
    pub closed_nbhd_size: usize,
    pub kind: SetKind,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditCheck {
    pub tag: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<serde_json::Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionAudit {
    /// True when the second argument has the larger ratio and was used as `G`.
    pub swapped: bool,
    pub size: usize,
    pub alpha_g: usize,
    pub alpha_h: usize,
    pub order_g: usize,
    pub order_h: usize,
    pub fibers: Vec<Fiber>,
    pub blocks: Vec<Block>,
    pub x_prime: VertexSet,
    pub index_sets: Vec<IndexSet>,
    pub checks: Vec<AuditCheck>,
}

impl DecompositionAudit {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AuditCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Check tags, in the order they are reported.
pub mod tags {
    pub const BLOCKS_PARTITION: &str = "blocks_partition";
    pub const STAR_INDEPENDENT: &str = "star_independent";
    pub const INDEX_SET_INDEPENDENT: &str = "index_set_independent";
    pub const CROSS_INDEPENDENT: &str = "cross_independent";
    pub const SIZE_DECOMPOSITION: &str = "size_decomposition";
    pub const INDEX_SET_RATIO_BOUND: &str = "index_set_ratio_bound";
    pub const BLOCK_AVOIDS_INDEX_NBHD: &str = "block_avoids_index_nbhd";
    pub const PRIME_COVERED: &str = "prime_covered";
    pub const BLOCK_RATIO_BOUND: &str = "block_ratio_bound";
    pub const EQUALITY_PATTERN: &str = "equality_pattern";
}

/// Precomputed factor data for auditing many sets of the same product.
pub struct Auditor<'a> {
    user_g: &'a Graph,
    user_h: &'a Graph,
    g: &'a Graph,
    h: &'a Graph,
    swapped: bool,
    product: Graph,
    alpha_g: usize,
    alpha_h: usize,
    alpha_product: usize,
}

impl<'a> Auditor<'a> {
    pub fn new(g: &'a Graph, h: &'a Graph, limits: &SearchLimits) -> Result<Auditor<'a>> {
        require_vertex_transitive(g, "first factor")?;
        require_vertex_transitive(h, "second factor")?;
        let fg = FactorFacts::compute(g, limits)?;
        let fh = FactorFacts::compute(h, limits)?;
        let product = direct_product(g, h)?;
        let alpha_product = independence_number(&product, limits)?;
        let swapped = fg.ratio < fh.ratio;
        let (big, small, ab, asmall) = if swapped {
            (h, g, fh.alpha, fg.alpha)
        } else {
            (g, h, fg.alpha, fh.alpha)
        };
        Ok(Auditor {
            user_g: g,
            user_h: h,
            g: big,
            h: small,
            swapped,
            product,
            alpha_g: ab,
            alpha_h: asmall,
            alpha_product,
        })
    }

    pub fn product(&self) -> &Graph {
        &self.product
    }

    pub fn audit(&self, s: &VertexSet) -> Result<DecompositionAudit> {
        if s.universe() != self.product.n() {
            return Err(Error::argument("set does not belong to this product"));
        }
        if !self.product.is_independent(s) {
            return Err(Error::argument("set is not independent in the product"));
        }
        if s.len() != self.alpha_product {
            return Err(Error::argument(format!(
                "set has {} vertices but α(G×H) = {}",
                s.len(),
                self.alpha_product
            )));
        }
        let (g, h) = (self.g, self.h);
        let (gn, hn) = (g.n(), h.n());
        let user_hn = self.user_h.n();
        debug_assert_eq!(self.user_g.n() * user_hn, self.product.n());

        // Fibers over the larger-ratio factor.
        let mut fiber_bits = vec![BitSet::new(hn); gn];
        for &i in s {
            let (u, v) = (i / user_hn, i % user_hn);
            let (a, x) = if self.swapped { (v, u) } else { (u, v) };
            fiber_bits[a].insert(x);
        }
        let mut fibers = Vec::with_capacity(gn);
        let mut star_bits = Vec::with_capacity(gn);
        let mut prime_bits = Vec::with_capacity(gn);
        for (a, xa) in fiber_bits.iter().enumerate() {
            let mut star = BitSet::new(hn);
            let mut prime = BitSet::new(hn);
            for x in xa.iter() {
                if h.neighbors(x).intersects(xa) {
                    prime.insert(x);
                } else {
                    star.insert(x);
                }
            }
            fibers.push(Fiber {
                a,
                all: VertexSet::from_bitset(xa),
                star: VertexSet::from_bitset(&star),
                prime: VertexSet::from_bitset(&prime),
            });
            star_bits.push(star);
            prime_bits.push(prime);
        }

        // Blocks keyed by the distinct X*_a, in order of first appearance.
        let mut ys: Vec<BitSet> = Vec::new();
        let mut bs: Vec<BitSet> = Vec::new();
        for (a, star) in star_bits.iter().enumerate() {
            match ys.iter().position(|y| y == star) {
                Some(i) => bs[i].insert(a),
                None => {
                    ys.push(star.clone());
                    bs.push(BitSet::from_indices(gn, [a]));
                }
            }
        }
        let y_sets: Vec<VertexSet> = ys.iter().map(VertexSet::from_bitset).collect();
        let y_closed: Vec<BitSet> = y_sets
            .iter()
            .map(|y| h.closed_neighborhood_bits(y))
            .collect();
        let y_outside: Vec<BitSet> = y_closed
            .iter()
            .map(|c| {
                let mut o = BitSet::full(hn);
                o.difference_with(c);
                o
            })
            .collect();
        let blocks: Vec<Block> = y_sets
            .iter()
            .zip(&bs)
            .zip(&y_closed)
            .map(|((y, b), c)| Block {
                y: y.clone(),
                b: VertexSet::from_bitset(b),
                y_closed_nbhd_size: c.count(),
                y_kind: kind(y.len(), c.count(), self.alpha_h, hn),
            })
            .collect();

        let mut x_prime = BitSet::new(hn);
        for p in &prime_bits {
            x_prime.union_with(p);
        }
        let index_sets: Vec<IndexSet> = x_prime
            .iter()
            .map(|x| {
                let a_x = VertexSet::from_sorted(
                    gn,
                    (0..gn).filter(|&a| prime_bits[a].contains(x)).collect(),
                );
                let closed = g.closed_neighborhood_size(&a_x);
                IndexSet {
                    x,
                    kind: kind(a_x.len(), closed, self.alpha_g, gn),
                    a_x,
                    closed_nbhd_size: closed,
                }
            })
            .collect();

        let mut checks = Vec::new();
        let mut push = |tag: &'static str, counterexample: Option<serde_json::Value>| {
            checks.push(AuditCheck {
                tag,
                passed: counterexample.is_none(),
                counterexample,
            });
        };

        // Structural facts.
        let mut covered = BitSet::new(gn);
        let mut overlap = None;
        for (i, b) in bs.iter().enumerate() {
            if covered.intersects(b) && overlap.is_none() {
                overlap = Some(json!({ "block": i }));
            }
            covered.union_with(b);
        }
        if overlap.is_none() && covered.count() != gn {
            overlap = Some(json!({ "uncovered": VertexSet::from_bitset(&{
                let mut u = BitSet::full(gn);
                u.difference_with(&covered);
                u
            }) }));
        }
        push(tags::BLOCKS_PARTITION, overlap);

        push(
            tags::STAR_INDEPENDENT,
            fibers
                .iter()
                .find(|f| !h.is_independent(&f.star))
                .map(|f| json!({ "a": f.a, "star": f.star })),
        );
        push(
            tags::INDEX_SET_INDEPENDENT,
            index_sets
                .iter()
                .find(|ix| !g.is_independent(&ix.a_x))
                .map(|ix| json!({ "x": ix.x, "a_x": ix.a_x })),
        );
        let cross = g.edges().into_iter().find_map(|(a, b)| {
            fiber_bits[a].iter().find_map(|x| {
                h.neighbors(x)
                    .intersection(&fiber_bits[b])
                    .first()
                    .map(|y| json!({ "a": a, "b": b, "x": x, "y": y }))
            })
        });
        push(tags::CROSS_INDEPENDENT, cross);

        // Counting identity.
        let block_part: usize = blocks.iter().map(|b| b.y.len() * b.b.len()).sum();
        let index_part: usize = index_sets.iter().map(|ix| ix.a_x.len()).sum();
        push(
            tags::SIZE_DECOMPOSITION,
            (s.len() != block_part + index_part).then(
                || json!({ "size": s.len(), "block_part": block_part, "index_part": index_part }),
            ),
        );

        let (ag, on) = (self.alpha_g as u128, gn as u128);
        push(
            tags::INDEX_SET_RATIO_BOUND,
            index_sets
                .iter()
                .find(|ix| ix.a_x.len() as u128 * on > ag * ix.closed_nbhd_size as u128)
                .map(|ix| json!({ "x": ix.x, "a_x": ix.a_x, "closed": ix.closed_nbhd_size })),
        );

        let mut separation = None;
        'outer: for ix in &index_sets {
            let index_closed = g.closed_neighborhood_bits(&ix.a_x);
            for (i, closed) in y_closed.iter().enumerate() {
                if closed.contains(ix.x) && bs[i].intersects(&index_closed) {
                    separation = Some(json!({ "x": ix.x, "block": i }));
                    break 'outer;
                }
            }
        }
        push(tags::BLOCK_AVOIDS_INDEX_NBHD, separation);

        let mut union_outside = BitSet::new(hn);
        for o in &y_outside {
            union_outside.union_with(o);
        }
        push(
            tags::PRIME_COVERED,
            x_prime
                .iter()
                .find(|&x| !union_outside.contains(x))
                .map(|x| json!({ "x": x })),
        );

        push(
            tags::BLOCK_RATIO_BOUND,
            blocks
                .iter()
                .enumerate()
                .find(|(_, b)| b.y.len() as u128 * on > ag * b.y_closed_nbhd_size as u128)
                .map(|(i, b)| json!({ "block": i, "y": b.y, "closed": b.y_closed_nbhd_size })),
        );

        // Maximality turns every inequality in the chain into an equality.
        let ratios_equal = self.alpha_g as u128 * hn as u128 == self.alpha_h as u128 * gn as u128;
        let mut pattern = None;
        if s.len() != self.alpha_g * hn {
            pattern = Some(json!({ "size": s.len(), "alpha_g_times_order_h": self.alpha_g * hn }));
        }
        if pattern.is_none() {
            pattern = index_sets.iter().find_map(|ix| {
                let outside_weight: usize = y_outside
                    .iter()
                    .zip(&bs)
                    .filter(|(o, _)| o.contains(ix.x))
                    .map(|(_, b)| b.count())
                    .sum();
                let tight = ix.a_x.len() as u128 * on == ag * ix.closed_nbhd_size as u128;
                let kind_ok = matches!(ix.kind, SetKind::Maximum | SetKind::Imprimitive);
                (!tight || !kind_ok || ix.closed_nbhd_size != outside_weight).then(|| {
                    json!({ "x": ix.x, "kind": ix.kind, "closed": ix.closed_nbhd_size,
                            "outside_block_weight": outside_weight })
                })
            });
        }
        if pattern.is_none() && union_outside != x_prime {
            pattern = Some(json!({ "x_prime": VertexSet::from_bitset(&x_prime),
                                   "outside_union": VertexSet::from_bitset(&union_outside) }));
        }
        if pattern.is_none() {
            pattern = blocks.iter().enumerate().find_map(|(i, b)| {
                let tight = b.y.len() as u128 * on == ag * b.y_closed_nbhd_size as u128;
                let kind_ok = match b.y_kind {
                    SetKind::Empty => true,
                    SetKind::Maximum | SetKind::Imprimitive => ratios_equal,
                    SetKind::Strict => false,
                };
                (!tight || !kind_ok).then(|| json!({ "block": i, "y": b.y, "kind": b.y_kind }))
            });
        }
        push(tags::EQUALITY_PATTERN, pattern);

        Ok(DecompositionAudit {
            swapped: self.swapped,
            size: s.len(),
            alpha_g: self.alpha_g,
            alpha_h: self.alpha_h,
            order_g: gn,
            order_h: hn,
            fibers,
            blocks,
            x_prime: VertexSet::from_bitset(&x_prime),
            index_sets,
            checks,
        })
    }
}

/// One-off audit; use [`Auditor`] for many sets of the same product.
pub fn audit_maximum_set(
    g: &Graph,
    h: &Graph,
    s: &VertexSet,
    limits: &SearchLimits,
) -> Result<DecompositionAudit> {
    Auditor::new(g, h, limits)?.audit(s)
}
