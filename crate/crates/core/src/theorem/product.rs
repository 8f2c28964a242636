use serde::Serialize;

use super::{require_vertex_transitive, FactorFacts, Side};
use crate::error::{Error, Result};
use crate::graph::{direct_product, Graph, VertexSet};
use crate::mis::{
    enumerate_maximum_independent_sets, independence_number, is_is_primitive, ImprimitivityWitness,
    Primitivity, Ratio, SearchLimits,
};

/// Both sides of `α(G×H) = max{α(G)|H|, α(H)|G|}`, in the caller's order.
#[derive(Clone, Debug, Serialize)]
pub struct ProductReport {
    pub alpha_g: usize,
    pub alpha_h: usize,
    pub order_g: usize,
    pub order_h: usize,
    pub ratio_g: Ratio,
    pub ratio_h: Ratio,
    pub predicted_alpha: usize,
    pub computed_alpha: usize,
    pub equal: bool,
    /// True when the second argument has the larger ratio.
    pub swapped: bool,
}

impl ProductReport {
    /// Turns a mismatch into a verification error.
    pub fn ensure(self) -> Result<Self> {
        if self.equal {
            Ok(self)
        } else {
            Err(Error::verification(format!(
                "α(G×H) = {} but max{{α(G)|H|, α(H)|G|}} = {}",
                self.computed_alpha, self.predicted_alpha
            )))
        }
    }
}

fn predicted(g: &Graph, h: &Graph, fg: &FactorFacts, fh: &FactorFacts) -> usize {
    (fg.alpha * h.n()).max(fh.alpha * g.n())
}

pub fn verify_alpha_product(g: &Graph, h: &Graph, limits: &SearchLimits) -> Result<ProductReport> {
    require_vertex_transitive(g, "first factor")?;
    require_vertex_transitive(h, "second factor")?;
    let fg = FactorFacts::compute(g, limits)?;
    let fh = FactorFacts::compute(h, limits)?;
    let product = direct_product(g, h)?;
    let computed_alpha = independence_number(&product, limits)?;
    let predicted_alpha = predicted(g, h, &fg, &fh);
    Ok(ProductReport {
        alpha_g: fg.alpha,
        alpha_h: fh.alpha,
        order_g: g.n(),
        order_h: h.n(),
        ratio_g: fg.ratio,
        ratio_h: fh.ratio,
        predicted_alpha,
        computed_alpha,
        equal: predicted_alpha == computed_alpha,
        swapped: fg.ratio < fh.ratio,
    })
}

/// `Some((Left, A))` iff `S = A × V(H)` with `A` independent in `G`,
/// `Some((Right, B))` iff `S = V(G) × B` with `B` independent in `H`.
/// The left reading wins when both apply.
pub fn preimage_factor(s: &VertexSet, g: &Graph, h: &Graph) -> Option<(Side, VertexSet)> {
    let (gn, hn) = (g.n(), h.n());
    if s.universe() != gn * hn {
        return None;
    }
    let mut left = vec![false; gn];
    let mut right = vec![false; hn];
    for &i in s {
        left[i / hn] = true;
        right[i % hn] = true;
    }
    let project = |marks: &[bool], n: usize| {
        VertexSet::from_sorted(n, (0..n).filter(|&v| marks[v]).collect())
    };
    let a = project(&left, gn);
    if a.len() * hn == s.len() && g.is_independent(&a) {
        return Some((Side::Left, a));
    }
    let b = project(&right, hn);
    if b.len() * gn == s.len() && h.is_independent(&b) {
        return Some((Side::Right, b));
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    MisNormal,
    ExceptionEqualRatioImprimitive,
    ExceptionHDisconnected,
}

/// The fact that licenses an exception verdict.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Trigger {
    Imprimitive {
        factor: Side,
        witness: ImprimitivityWitness,
    },
    Disconnected {
        factor: Side,
        components: Vec<Vec<usize>>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct Attribution {
    pub factor: Side,
    pub set: VertexSet,
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalityClassification {
    pub verdict: Verdict,
    pub alpha: usize,
    pub mis_count: usize,
    pub ratio_g: Ratio,
    pub ratio_h: Ratio,
    pub swapped: bool,
    /// Maximum sets of the form `A × V(H)`, counted for every verdict.
    pub left_preimages: usize,
    pub right_preimages: usize,
    /// Factor preimage of every maximum set, present for normal verdicts.
    pub attributions: Vec<Attribution>,
    /// First maximum set in canonical order that is not a preimage.
    pub witness: Option<VertexSet>,
    pub trigger: Option<Trigger>,
}

fn primitivity_known(g: &Graph, limits: &SearchLimits) -> Result<Option<ImprimitivityWitness>> {
    match is_is_primitive(g, limits)? {
        Primitivity::Primitive => Ok(None),
        Primitivity::Imprimitive { witness } => Ok(Some(witness)),
        Primitivity::Unknown { reason } => Err(Error::resource(format!(
            "primitivity unknown, cannot choose an exception clause: {reason}"
        ))),
    }
}

/// Enumerates `I(G×H)` and sorts the product into the trichotomy. An
/// observation that fits no clause is reported as a verification failure.
pub fn classify_product(
    g: &Graph,
    h: &Graph,
    limits: &SearchLimits,
) -> Result<NormalityClassification> {
    require_vertex_transitive(g, "first factor")?;
    require_vertex_transitive(h, "second factor")?;
    let fg = FactorFacts::compute(g, limits)?;
    let fh = FactorFacts::compute(h, limits)?;
    let product = direct_product(g, h)?;
    let family = enumerate_maximum_independent_sets(&product, limits)?;
    let expected = predicted(g, h, &fg, &fh);
    if family.alpha != expected {
        return Err(Error::verification(format!(
            "α(G×H) = {} but the product formula gives {expected}",
            family.alpha
        )));
    }

    let mut attributions = Vec::with_capacity(family.len());
    let mut witness = None;
    for s in &family.sets {
        match preimage_factor(s, g, h) {
            Some((factor, set)) => attributions.push(Attribution { factor, set }),
            None if witness.is_none() => witness = Some(s.clone()),
            None => {}
        }
    }
    let left_preimages = attributions
        .iter()
        .filter(|a| a.factor == Side::Left)
        .count();
    let swapped = fg.ratio < fh.ratio;
    let mut report = NormalityClassification {
        verdict: Verdict::MisNormal,
        alpha: family.alpha,
        mis_count: family.len(),
        ratio_g: fg.ratio,
        ratio_h: fh.ratio,
        swapped,
        left_preimages,
        right_preimages: attributions.len() - left_preimages,
        attributions: Vec::new(),
        witness: None,
        trigger: None,
    };

    let Some(witness) = witness else {
        report.attributions = attributions;
        return Ok(report);
    };
    report.witness = Some(witness);

    if fg.ratio == fh.ratio {
        for (factor, graph) in [(Side::Left, g), (Side::Right, h)] {
            if let Some(w) = primitivity_known(graph, limits)? {
                report.verdict = Verdict::ExceptionEqualRatioImprimitive;
                report.trigger = Some(Trigger::Imprimitive { factor, witness: w });
                return Ok(report);
            }
        }
        return Err(Error::verification(
            "equal ratios, both factors IS-primitive, yet a maximum set is not a preimage",
        ));
    }

    let (factor, smaller) = if swapped {
        (Side::Left, g)
    } else {
        (Side::Right, h)
    };
    let components = smaller.components();
    if components.len() > 1 {
        report.verdict = Verdict::ExceptionHDisconnected;
        report.trigger = Some(Trigger::Disconnected { factor, components });
        return Ok(report);
    }
    Err(Error::verification(
        "strict ratio gap with a connected smaller-ratio factor, yet a maximum set is not a preimage",
    ))
}
