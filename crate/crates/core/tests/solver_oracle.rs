mod common;

use proptest::prelude::*;
use vtis_core::graph::{
    circular_graph, complete_graph, cycle_graph, direct_product, disjoint_union, kneser_graph,
    permutation_graph,
};
use vtis_core::mis::{enumerate_maximum_independent_sets, independence_number};
use vtis_core::{Graph, SearchLimits};

fn family_sets(g: &Graph, limits: &SearchLimits) -> (usize, Vec<Vec<usize>>) {
    let f = enumerate_maximum_independent_sets(g, limits).unwrap();
    (
        f.alpha,
        f.sets.iter().map(|s| s.as_slice().to_vec()).collect(),
    )
}

#[test]
fn seeded_random_graphs_match_oracle() {
    let limits = SearchLimits::default();
    for seed in 0..120u64 {
        let n = 1 + (seed as usize * 7) % 18;
        let density = 0.1 * (1 + seed % 9) as f64;
        let g = common::random_graph(seed, n, density);
        let expected = common::brute_mis(&g);
        assert_eq!(family_sets(&g, &limits), expected, "seed {seed}");
        assert_eq!(independence_number(&g, &limits).unwrap(), expected.0);
    }
}

#[test]
fn family_graphs_match_oracle() {
    let limits = SearchLimits::default();
    let graphs = vec![
        kneser_graph(1, 2, 5).unwrap(),
        kneser_graph(1, 2, 6).unwrap(),
        kneser_graph(2, 3, 6).unwrap(),
        circular_graph(2, 7).unwrap(),
        circular_graph(3, 9).unwrap(),
        cycle_graph(11).unwrap(),
        permutation_graph(3).unwrap(),
        direct_product(&complete_graph(3).unwrap(), &cycle_graph(5).unwrap()).unwrap(),
        direct_product(&complete_graph(2).unwrap(), &kneser_graph(1, 2, 5).unwrap()).unwrap(),
        disjoint_union(&complete_graph(3).unwrap(), &complete_graph(3).unwrap()).unwrap(),
    ];
    for g in &graphs {
        assert_eq!(family_sets(g, &limits), common::brute_mis(g));
    }
}

#[test]
fn worker_count_does_not_change_output() {
    let g = direct_product(
        &permutation_graph(3).unwrap(),
        &permutation_graph(3).unwrap(),
    )
    .unwrap();
    let reference = family_sets(
        &g,
        &SearchLimits {
            threads: 1,
            ..SearchLimits::default()
        },
    );
    for threads in [2, 3, 8] {
        let limits = SearchLimits {
            threads,
            ..SearchLimits::default()
        };
        assert_eq!(family_sets(&g, &limits), reference);
    }
    assert_eq!(reference.1.len(), 1296);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn deleting_an_edge_never_lowers_alpha(seed in any::<u64>(), n in 2usize..14, d in 1u32..9) {
        let g = common::random_graph(seed, n, d as f64 / 10.0);
        let limits = SearchLimits::default();
        let alpha = independence_number(&g, &limits).unwrap();
        for (u, v) in g.edges() {
            let smaller = g.without_edge(u, v).unwrap();
            let a2 = independence_number(&smaller, &limits).unwrap();
            prop_assert!(a2 == alpha || a2 == alpha + 1);
        }
    }

    #[test]
    fn every_reported_set_is_maximum_and_independent(seed in any::<u64>(), n in 0usize..16, d in 1u32..9) {
        let g = common::random_graph(seed, n, d as f64 / 10.0);
        let (alpha, sets) = family_sets(&g, &SearchLimits::default());
        prop_assert!(!sets.is_empty());
        for s in &sets {
            prop_assert_eq!(s.len(), alpha);
            prop_assert!(common::is_independent(&g, s));
        }
        let mut sorted = sets.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted, sets);
    }
}
