use serde::Serialize;

use super::require_vertex_transitive;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mis::{independence_number, is_is_primitive, Primitivity, Ratio, SearchLimits};

#[derive(Clone, Debug, Serialize)]
pub struct BipartiteReport {
    pub components: usize,
    pub connected: bool,
    pub primitivity: Primitivity,
    pub ratio: Ratio,
}

/// For a vertex-transitive bipartite graph with at least one edge: the
/// ratio is exactly 1/2, and imprimitivity coincides with disconnection.
pub fn bipartite_imprimitivity_check(g: &Graph, limits: &SearchLimits) -> Result<BipartiteReport> {
    require_vertex_transitive(g, "graph")?;
    if !g.is_bipartite() {
        return Err(Error::argument("graph is not bipartite"));
    }
    if g.edge_count() == 0 {
        return Err(Error::argument("graph has no edges"));
    }
    let alpha = independence_number(g, limits)?;
    let ratio = Ratio::independence(alpha, g);
    if ratio != Ratio::half() {
        return Err(Error::verification(format!(
            "bipartite vertex-transitive graph with independence ratio {ratio}"
        )));
    }
    let components = g.components().len();
    let primitivity = is_is_primitive(g, limits)?;
    match primitivity.is_primitive() {
        None => {
            return Err(Error::resource("primitivity unknown within budget"));
        }
        Some(primitive) if primitive != (components == 1) => {
            return Err(Error::verification(format!(
                "bipartite graph with {components} components is {}",
                if primitive {
                    "primitive"
                } else {
                    "imprimitive"
                }
            )));
        }
        _ => {}
    }
    Ok(BipartiteReport {
        components,
        connected: components == 1,
        primitivity,
        ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{circular_graph, cycle_graph};

    #[test]
    fn hexagon_and_matching() {
        let r = bipartite_imprimitivity_check(&cycle_graph(6).unwrap(), &SearchLimits::default())
            .unwrap();
        assert!(r.connected);
        assert_eq!(r.primitivity, Primitivity::Primitive);
        assert_eq!((r.ratio.numerator, r.ratio.denominator), (3, 6));
        let r =
            bipartite_imprimitivity_check(&circular_graph(2, 4).unwrap(), &SearchLimits::default())
                .unwrap();
        assert!(!r.connected);
        assert!(matches!(r.primitivity, Primitivity::Imprimitive { .. }));
    }

    #[test]
    fn hypotheses_enforced() {
        assert!(matches!(
            bipartite_imprimitivity_check(&cycle_graph(5).unwrap(), &SearchLimits::default()),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            bipartite_imprimitivity_check(
                &crate::graph::edgeless_graph(4).unwrap(),
                &SearchLimits::default()
            ),
            Err(Error::Argument(_))
        ));
    }
}
