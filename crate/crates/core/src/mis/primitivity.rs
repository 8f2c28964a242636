use serde::Serialize;

use super::enumerate::IndependentSets;
use super::{independence_number, SearchLimits};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::symmetry;

/// An independent set `A` with `0 < |A| < α` and `|A| / |N[A]| = α / |V|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImprimitivityWitness {
    pub set: VertexSet,
    pub alpha: usize,
    pub closed_nbhd_size: usize,
}

impl ImprimitivityWitness {
    /// Re-checks all defining conditions against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let a = self.set.len();
        g.is_independent(&self.set)
            && a > 0
            && a < self.alpha
            && g.closed_neighborhood_size(&self.set) == self.closed_nbhd_size
            && a as u128 * g.n() as u128 == self.alpha as u128 * self.closed_nbhd_size as u128
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Primitivity {
    Primitive,
    Imprimitive { witness: ImprimitivityWitness },
    Unknown { reason: String },
}

impl Primitivity {
    pub fn is_primitive(&self) -> Option<bool> {
        match self {
            Primitivity::Primitive => Some(true),
            Primitivity::Imprimitive { .. } => Some(false),
            Primitivity::Unknown { .. } => None,
        }
    }
}

/// Smallest imprimitive independent set, first in lexicographic order among
/// those of that size. `Ok(None)` certifies IS-primitivity.
///
/// Automorphisms preserve imprimitivity, so on a vertex-transitive graph
/// some smallest witness contains vertex 0, and since sets containing 0
/// come first lexicographically the sweep can be restricted to them.
pub fn find_imprimitive_set(
    g: &Graph,
    limits: &SearchLimits,
) -> Result<Option<ImprimitivityWitness>> {
    if !symmetry::is_vertex_transitive(g)? {
        return Err(Error::argument(
            "imprimitivity is only defined here for vertex-transitive graphs",
        ));
    }
    if g.n() == 0 {
        return Ok(None);
    }
    let alpha = independence_number(g, limits)?;
    let n = g.n() as u128;
    let mut budget = limits.node_budget;
    for size in 1..alpha {
        let mut sweep = IndependentSets::starting_at(g, size, 0, budget);
        let mut used = 0;
        for item in sweep.by_ref() {
            let set = item.map_err(|_| {
                Error::resource("primitivity unknown: independent-set sweep budget exhausted")
            })?;
            used += 1;
            if set.len() != size {
                continue;
            }
            let closed = g.closed_neighborhood_size(&set);
            if size as u128 * n == alpha as u128 * closed as u128 {
                return Ok(Some(ImprimitivityWitness {
                    set,
                    alpha,
                    closed_nbhd_size: closed,
                }));
            }
        }
        budget = budget.saturating_sub(used);
    }
    Ok(None)
}

/// Tri-state wrapper over [`find_imprimitive_set`]: budget exhaustion is
/// reported as `Unknown`, never as primitive.
pub fn is_is_primitive(g: &Graph, limits: &SearchLimits) -> Result<Primitivity> {
    match find_imprimitive_set(g, limits) {
        Ok(None) => Ok(Primitivity::Primitive),
        Ok(Some(witness)) => Ok(Primitivity::Imprimitive { witness }),
        Err(Error::Resource(reason)) => Ok(Primitivity::Unknown { reason }),
        Err(e) => Err(e),
    }
}
