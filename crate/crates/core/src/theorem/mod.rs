//! The product formula and its structural consequences as executable checks.
//!
//! Throughout, the factor with the larger independence ratio plays the role
//! of `G`. Functions accept factors in any order, swap internally, and
//! report a `swapped` flag so results can be read in the caller's order.

mod audit;
mod bipartite;
mod multifactor;
mod product;
mod ratio_bound;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mis::{independence_number, Ratio, SearchLimits};
use crate::symmetry;

pub use audit::{audit_maximum_set, AuditCheck, Auditor, Block, DecompositionAudit, SetKind};
pub use bipartite::{bipartite_imprimitivity_check, BipartiteReport};
pub use multifactor::{
    classify_multifactor, CrossCheck, MultiFactorPlan, MultiFactorReport, MultiVerdict,
};
pub use product::{
    classify_product, preimage_factor, verify_alpha_product, NormalityClassification,
    ProductReport, Trigger, Verdict,
};
pub use ratio_bound::{verify_ratio_bound, RatioBoundReport, RatioBoundVerifier};

/// Which argument of a two-factor call a result refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

pub(crate) fn require_vertex_transitive(g: &Graph, what: &str) -> Result<()> {
    if symmetry::is_vertex_transitive(g)? {
        Ok(())
    } else {
        Err(Error::argument(format!("{what} is not vertex-transitive")))
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct FactorFacts {
    pub alpha: usize,
    pub ratio: Ratio,
}

impl FactorFacts {
    pub fn compute(g: &Graph, limits: &SearchLimits) -> Result<FactorFacts> {
        let alpha = independence_number(g, limits)?;
        Ok(FactorFacts {
            alpha,
            ratio: Ratio::independence(alpha, g),
        })
    }
}
