//! Normality of products with more than two factors.
//!
//! Factors are sorted by nonincreasing independence ratio; `ell` counts the
//! factors attaining the top ratio. A product of connected vertex-transitive
//! factors is predicted MIS-normal iff either the top ratio is below 1/2 and
//! (`ell == 1` or all top factors are IS-primitive), or the top ratio is
//! exactly 1/2 and `ell <= 2`.

use serde::Serialize;

use super::{require_vertex_transitive, FactorFacts};
use crate::error::{Error, Result};
use crate::graph::{direct_product, Graph, VertexSet};
use crate::mis::{
    enumerate_maximum_independent_sets, is_is_primitive, Primitivity, Ratio, SearchLimits,
};

#[derive(Clone, Debug, Serialize)]
pub struct MultiFactorPlan {
    /// Input positions sorted by nonincreasing ratio (stable).
    pub order: Vec<usize>,
    /// Ratios in sorted order.
    pub ratios: Vec<Ratio>,
    pub ell: usize,
    /// Vertex counts of `H_0 = G_1×…×G_ell` and each `H_i = H_{i-1}×G_{ell+i}`.
    pub partial_product_orders: Vec<usize>,
}

impl MultiFactorPlan {
    fn new(factors: &[Graph], facts: &[FactorFacts]) -> MultiFactorPlan {
        let mut order: Vec<usize> = (0..factors.len()).collect();
        order.sort_by(|&a, &b| facts[b].ratio.cmp(&facts[a].ratio));
        let ratios: Vec<Ratio> = order.iter().map(|&i| facts[i].ratio).collect();
        let ell = ratios.iter().take_while(|&&r| r == ratios[0]).count();
        let mut partial = Vec::new();
        let mut acc: usize = order[..ell].iter().map(|&i| factors[i].n()).product();
        partial.push(acc);
        for &i in &order[ell..] {
            acc *= factors[i].n();
            partial.push(acc);
        }
        MultiFactorPlan {
            order,
            ratios,
            ell,
            partial_product_orders: partial,
        }
    }

    /// Materializes `H_0, H_1, …` for the given factor list.
    pub fn partial_products(&self, factors: &[Graph]) -> Result<Vec<Graph>> {
        let mut h = factors[self.order[0]].clone();
        for &i in &self.order[1..self.ell] {
            h = direct_product(&h, &factors[i])?;
        }
        let mut out = vec![h];
        for &i in &self.order[self.ell..] {
            let next = direct_product(out.last().unwrap(), &factors[i])?;
            out.push(next);
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MultiVerdict {
    MisNormal,
    NotNormal,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheck {
    pub alpha: usize,
    pub mis_count: usize,
    pub preimage_count: usize,
    pub observed: MultiVerdict,
    /// First maximum set in canonical order that is no factor's preimage.
    pub witness: Option<VertexSet>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiFactorReport {
    pub plan: MultiFactorPlan,
    pub predicted: MultiVerdict,
    pub reason: String,
    /// Set when `ell == 1` below ratio 1/2: normality then follows from the
    /// connectivity of the remaining factors alone.
    pub single_top_factor: bool,
    pub top_primitivity: Vec<Primitivity>,
    pub cross_check: Option<CrossCheck>,
}

/// Mixed-radix coordinates of a flattened product vertex.
fn coordinates(mut index: usize, orders: &[usize]) -> Vec<usize> {
    let mut out = vec![0; orders.len()];
    for (slot, &n) in out.iter_mut().zip(orders).rev() {
        *slot = index % n;
        index /= n;
    }
    out
}

fn is_factor_preimage(s: &VertexSet, factors: &[Graph], orders: &[usize]) -> bool {
    let total: usize = orders.iter().product();
    let coords: Vec<Vec<usize>> = s.iter().map(|&i| coordinates(i, orders)).collect();
    (0..factors.len()).any(|f| {
        let mut projection: Vec<usize> = coords.iter().map(|c| c[f]).collect();
        projection.sort_unstable();
        projection.dedup();
        projection.len() * (total / orders[f]) == s.len()
            && factors[f].is_independent(&VertexSet::from_sorted(orders[f], projection))
    })
}

pub fn classify_multifactor(
    factors: &[Graph],
    cross_check: bool,
    limits: &SearchLimits,
) -> Result<MultiFactorReport> {
    if factors.len() < 2 {
        return Err(Error::argument("at least two factors are required"));
    }
    for (i, f) in factors.iter().enumerate() {
        require_vertex_transitive(f, &format!("factor {}", i + 1))?;
        if !f.is_connected() {
            return Err(Error::argument(format!(
                "factor {} is disconnected; use the two-factor classifier",
                i + 1
            )));
        }
        if f.edge_count() == 0 {
            return Err(Error::argument(format!("factor {} has no edges", i + 1)));
        }
    }
    let facts = factors
        .iter()
        .map(|f| FactorFacts::compute(f, limits))
        .collect::<Result<Vec<_>>>()?;
    let plan = MultiFactorPlan::new(factors, &facts);
    let top = plan.ratios[0];
    let mut top_primitivity = Vec::new();
    let mut single_top_factor = false;

    let (predicted, reason) = if top == Ratio::half() {
        if plan.ell <= 2 {
            (
                MultiVerdict::MisNormal,
                format!("top ratio 1/2 attained by {} <= 2 factors", plan.ell),
            )
        } else {
            (
                MultiVerdict::NotNormal,
                format!("top ratio 1/2 attained by {} > 2 factors", plan.ell),
            )
        }
    } else if top < Ratio::half() {
        if plan.ell == 1 {
            single_top_factor = true;
            (
                MultiVerdict::MisNormal,
                "single top-ratio factor and every other factor connected".to_string(),
            )
        } else {
            let mut imprimitive = None;
            for &i in &plan.order[..plan.ell] {
                let p = is_is_primitive(&factors[i], limits)?;
                match p.is_primitive() {
                    None => {
                        return Err(Error::resource(format!(
                            "primitivity of factor {} unknown within budget",
                            i + 1
                        )))
                    }
                    Some(false) if imprimitive.is_none() => imprimitive = Some(i),
                    _ => {}
                }
                top_primitivity.push(p);
            }
            match imprimitive {
                None => (
                    MultiVerdict::MisNormal,
                    format!("all {} top-ratio factors are IS-primitive", plan.ell),
                ),
                Some(i) => (
                    MultiVerdict::NotNormal,
                    format!("top-ratio factor {} is IS-imprimitive", i + 1),
                ),
            }
        }
    } else {
        return Err(Error::verification(format!(
            "connected vertex-transitive factor with ratio {top} above 1/2"
        )));
    };

    let cross = if cross_check {
        let mut product = factors[0].clone();
        for f in &factors[1..] {
            product = direct_product(&product, f)?;
        }
        let family = enumerate_maximum_independent_sets(&product, limits)?;
        let orders: Vec<usize> = factors.iter().map(Graph::n).collect();
        let mut preimage_count = 0;
        let mut witness = None;
        for s in &family.sets {
            if is_factor_preimage(s, factors, &orders) {
                preimage_count += 1;
            } else if witness.is_none() {
                witness = Some(s.clone());
            }
        }
        let observed = if witness.is_none() {
            MultiVerdict::MisNormal
        } else {
            MultiVerdict::NotNormal
        };
        if observed != predicted {
            return Err(Error::verification(format!(
                "predicted {predicted:?} ({reason}) but enumeration shows {observed:?}"
            )));
        }
        Some(CrossCheck {
            alpha: family.alpha,
            mis_count: family.len(),
            preimage_count,
            observed,
            witness,
        })
    } else {
        None
    };

    Ok(MultiFactorReport {
        plan,
        predicted,
        reason,
        single_top_factor,
        top_primitivity,
        cross_check: cross,
    })
}
