use std::cell::OnceCell;

use serde::Serialize;

use super::require_vertex_transitive;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::mis::{
    enumerate_maximum_independent_sets, independence_number, MisFamily, SearchLimits,
};

/// `|A|·|V| ≤ α·|N[A]|` for one independent set, plus the consequences
/// of equality when it holds.
#[derive(Clone, Debug, Serialize)]
pub struct RatioBoundReport {
    pub size: usize,
    pub closed_nbhd_size: usize,
    pub alpha: usize,
    pub order: usize,
    pub holds: bool,
    pub equality: bool,
    /// Every maximum set meets `N[A]` in exactly `|A|` vertices.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meets_every_maximum_set_in_size: Option<bool>,
    /// `A` lies inside some maximum set.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contained_in_maximum_set: Option<bool>,
}

impl RatioBoundReport {
    pub fn passed(&self) -> bool {
        self.holds
            && self.meets_every_maximum_set_in_size != Some(false)
            && self.contained_in_maximum_set != Some(false)
    }
}

/// Caches `α(G)` and, on first need, `I(G)` for sweeps over many sets.
pub struct RatioBoundVerifier<'g> {
    g: &'g Graph,
    alpha: usize,
    limits: SearchLimits,
    family: OnceCell<MisFamily>,
}

impl<'g> RatioBoundVerifier<'g> {
    pub fn new(g: &'g Graph, limits: &SearchLimits) -> Result<Self> {
        require_vertex_transitive(g, "graph")?;
        Ok(RatioBoundVerifier {
            g,
            alpha: independence_number(g, limits)?,
            limits: *limits,
            family: OnceCell::new(),
        })
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    fn family(&self) -> Result<&MisFamily> {
        if let Some(f) = self.family.get() {
            return Ok(f);
        }
        let f = enumerate_maximum_independent_sets(self.g, &self.limits)?;
        Ok(self.family.get_or_init(|| f))
    }

    pub fn check(&self, a: &VertexSet) -> Result<RatioBoundReport> {
        if !self.g.is_independent(a) {
            return Err(Error::argument("set is not independent"));
        }
        let closed = self.g.closed_neighborhood(a)?;
        let lhs = a.len() as u128 * self.g.n() as u128;
        let rhs = self.alpha as u128 * closed.len() as u128;
        let mut report = RatioBoundReport {
            size: a.len(),
            closed_nbhd_size: closed.len(),
            alpha: self.alpha,
            order: self.g.n(),
            holds: lhs <= rhs,
            equality: lhs == rhs,
            meets_every_maximum_set_in_size: None,
            contained_in_maximum_set: None,
        };
        if report.equality && !a.is_empty() {
            let family = self.family()?;
            report.meets_every_maximum_set_in_size = Some(
                family
                    .sets
                    .iter()
                    .all(|s| s.intersection_len(&closed) == a.len()),
            );
            report.contained_in_maximum_set = Some(family.sets.iter().any(|s| a.is_subset(s)));
        }
        Ok(report)
    }
}

pub fn verify_ratio_bound(
    g: &Graph,
    a: &VertexSet,
    limits: &SearchLimits,
) -> Result<RatioBoundReport> {
    RatioBoundVerifier::new(g, limits)?.check(a)
}
