//! Exact independence numbers, maximum-independent-set enumeration, and
//! imprimitive-set search.

mod enumerate;
pub mod oracle;
mod primitivity;
mod solver;

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{Graph, VertexSet};

pub use enumerate::{enumerate_independent_sets, IndependentSets};
pub use primitivity::{find_imprimitive_set, is_is_primitive, ImprimitivityWitness, Primitivity};
pub use solver::{enumerate_maximum_independent_sets, independence_number};

/// Search limits shared by every exhaustive routine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Branch-and-bound nodes (or enumerated sets, for plain sweeps).
    pub node_budget: u64,
    /// Largest maximum-independent-set family that may be materialized.
    pub family_budget: usize,
    /// Worker threads for enumeration; 0 uses every available core.
    pub threads: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            node_budget: 50_000_000,
            family_budget: 1_000_000,
            threads: 0,
        }
    }
}

impl SearchLimits {
    pub fn with_node_budget(node_budget: u64) -> Self {
        SearchLimits {
            node_budget,
            ..SearchLimits::default()
        }
    }
}

/// An exact non-negative fraction kept unreduced, e.g. `(α, |V|)`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Ratio {
    pub numerator: u64,
    pub denominator: u64,
}

impl Ratio {
    pub fn new(numerator: u64, denominator: u64) -> Ratio {
        assert!(denominator > 0, "ratio with zero denominator");
        Ratio {
            numerator,
            denominator,
        }
    }

    pub fn half() -> Ratio {
        Ratio::new(1, 2)
    }

    /// `α(G) / |V(G)|`.
    pub fn independence(alpha: usize, g: &Graph) -> Ratio {
        Ratio::new(alpha as u64, g.n().max(1) as u64)
    }
}

impl PartialEq for Ratio {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Ratio {}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.numerator as u128 * other.denominator as u128;
        let rhs = other.numerator as u128 * self.denominator as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// The complete family `I(G)` of maximum independent sets, sorted
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisFamily {
    pub alpha: usize,
    pub sets: Vec<VertexSet>,
}

impl MisFamily {
    pub(crate) fn new(alpha: usize, mut sets: Vec<VertexSet>) -> MisFamily {
        sets.sort();
        sets.dedup();
        MisFamily { alpha, sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

impl Serialize for MisFamily {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            alpha: usize,
            count: usize,
            sets: &'a [VertexSet],
        }
        Repr {
            alpha: self.alpha,
            count: self.sets.len(),
            sets: &self.sets,
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios_compare_exactly() {
        assert_eq!(Ratio::new(4, 10), Ratio::new(2, 5));
        assert!(Ratio::new(1, 2) > Ratio::new(2, 5));
        assert!(Ratio::new(1, 3) < Ratio::new(2, 5));
        let big = Ratio::new(u64::MAX - 1, u64::MAX);
        assert!(big < Ratio::new(1, 1));
        assert_eq!(Ratio::new(3, 6).to_string(), "3/6");
    }

    #[test]
    fn family_json_shape() {
        let fam = MisFamily::new(
            1,
            vec![
                VertexSet::new(2, [1]).unwrap(),
                VertexSet::new(2, [0]).unwrap(),
            ],
        );
        assert_eq!(
            serde_json::to_string(&fam).unwrap(),
            r#"{"alpha":1,"count":2,"sets":[[0],[1]]}"#
        );
    }
}
