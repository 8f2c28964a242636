//! Reference tables comparing closed-form independence numbers with the
//! solver, written as CSV with columns `family,params,expected,computed,match`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::graph::{direct_product, Graph};
use crate::mis::{independence_number, SearchLimits};
use crate::spec::graph_from_spec;

/// Factors of the two-factor product grid.
pub const THEOREM_GRID: [&str; 9] = [
    "complete(2)",
    "complete(3)",
    "circ(2,5)",
    "cycle(6)",
    "circ(2,4)",
    "circ(2,6)",
    "kneser(1,2,5)",
    "perm(3)",
    "union(complete(3),complete(3))",
];

/// Largest product order included in the grid.
pub const THEOREM_GRID_MAX_ORDER: usize = 60;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub family: String,
    pub params: String,
    pub expected: usize,
    pub computed: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl ReportRow {
    fn new(family: &str, params: String, expected: usize, computed: usize) -> ReportRow {
        ReportRow {
            family: family.to_string(),
            params,
            expected,
            computed,
            matches: expected == computed,
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn rows_in_parallel(
    jobs: Vec<(String, String, usize)>,
    family: &str,
    limits: &SearchLimits,
) -> Result<Vec<ReportRow>> {
    jobs.into_par_iter()
        .map(|(spec, params, expected)| {
            let g = graph_from_spec(&spec)?;
            Ok(ReportRow::new(
                family,
                params,
                expected,
                independence_number(&g, limits)?,
            ))
        })
        .collect()
}

/// `α(K(1,r,n))` against `C(n-1, r-1)` for `2r ≤ n ≤ 8`, `r ≤ 3`.
pub fn ekr_grid(limits: &SearchLimits) -> Result<Vec<ReportRow>> {
    let mut jobs = Vec::new();
    for r in 1..=3 {
        for n in 2 * r..=8 {
            jobs.push((
                format!("kneser(1,{r},{n})"),
                format!("t=1 r={r} n={n}"),
                binomial(n - 1, r - 1),
            ));
        }
    }
    rows_in_parallel(jobs, "kneser", limits)
}

/// `α(Circ(r,n))` against `r` for `2r ≤ n ≤ 10`.
pub fn circ_grid(limits: &SearchLimits) -> Result<Vec<ReportRow>> {
    let mut jobs = Vec::new();
    for r in 1..=5 {
        for n in 2 * r..=10 {
            jobs.push((format!("circ({r},{n})"), format!("r={r} n={n}"), r));
        }
    }
    rows_in_parallel(jobs, "circ", limits)
}

/// Derangement graphs against `(n-1)!`.
pub fn sn_values(ns: &[usize], limits: &SearchLimits) -> Result<Vec<ReportRow>> {
    let jobs = ns
        .iter()
        .map(|&n| (format!("perm({n})"), format!("n={n}"), factorial(n - 1)))
        .collect();
    rows_in_parallel(jobs, "perm", limits)
}

/// Ordered pairs from [`THEOREM_GRID`] whose product fits the order cap.
pub fn theorem_grid_pairs() -> Result<Vec<(&'static str, &'static str, Graph, Graph)>> {
    let graphs = THEOREM_GRID
        .iter()
        .map(|s| graph_from_spec(s))
        .collect::<Result<Vec<_>>>()?;
    let mut pairs = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        for (j, h) in graphs.iter().enumerate() {
            if g.n() * h.n() <= THEOREM_GRID_MAX_ORDER {
                pairs.push((THEOREM_GRID[i], THEOREM_GRID[j], g.clone(), h.clone()));
            }
        }
    }
    Ok(pairs)
}

/// `α(G×H)` against `max{α(G)|H|, α(H)|G|}` over the product grid.
pub fn theorem_grid(limits: &SearchLimits) -> Result<Vec<ReportRow>> {
    let graphs = THEOREM_GRID
        .iter()
        .map(|s| graph_from_spec(s))
        .collect::<Result<Vec<_>>>()?;
    let alphas = graphs
        .iter()
        .map(|g| independence_number(g, limits))
        .collect::<Result<Vec<_>>>()?;
    let index = |name: &str| THEOREM_GRID.iter().position(|s| *s == name).unwrap();
    theorem_grid_pairs()?
        .into_par_iter()
        .map(|(gs, hs, g, h)| {
            let (i, j) = (index(gs), index(hs));
            let expected = (alphas[i] * h.n()).max(alphas[j] * g.n());
            let computed = independence_number(&direct_product(&g, &h)?, limits)?;
            Ok(ReportRow::new(
                "product",
                format!("{gs} x {hs}"),
                expected,
                computed,
            ))
        })
        .collect()
}

/// Every table, in a fixed order.
pub fn full_report(limits: &SearchLimits) -> Result<Vec<ReportRow>> {
    let mut rows = ekr_grid(limits)?;
    rows.extend(circ_grid(limits)?);
    rows.extend(sn_values(&[3, 4], limits)?);
    rows.extend(theorem_grid(limits)?);
    Ok(rows)
}

pub fn to_csv(rows: &[ReportRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv is utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(binomial(7, 2), 21);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(factorial(4), 24);
    }

    #[test]
    fn grid_sizes() {
        let pairs = theorem_grid_pairs().unwrap();
        assert!(pairs.iter().all(|(_, _, g, h)| g.n() * h.n() <= 60));
        // Only the Petersen graph squared exceeds the cap.
        assert_eq!(pairs.len(), 80);
    }

    #[test]
    fn csv_header_and_quoting() {
        let rows = vec![ReportRow::new(
            "product",
            "circ(2,5) x perm(3)".into(),
            12,
            12,
        )];
        let text = to_csv(&rows);
        assert_eq!(
            text,
            "family,params,expected,computed,match\nproduct,\"circ(2,5) x perm(3)\",12,12,true\n"
        );
    }

    #[test]
    fn small_tables_match() {
        let limits = SearchLimits::default();
        assert!(circ_grid(&limits).unwrap().iter().all(|r| r.matches));
        assert!(sn_values(&[3, 4], &limits)
            .unwrap()
            .iter()
            .all(|r| r.matches));
    }
}
