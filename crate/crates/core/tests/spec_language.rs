use proptest::prelude::*;
use vtis_core::graph::{complete_graph, disjoint_union, kneser_graph};
use vtis_core::spec::{eval_spec, graph_from_spec, parse_spec, GraphSpec, ParseError};
use vtis_core::Error;

fn leaf() -> impl Strategy<Value = GraphSpec> {
    prop_oneof![
        (1usize..4, 0usize..3, 0usize..4).prop_map(|(t, dr, dn)| {
            let r = t + dr;
            GraphSpec::Kneser { t, r, n: r + dn }
        }),
        (1usize..5, 0usize..5).prop_map(|(r, d)| GraphSpec::Circ { r, n: 2 * r + d }),
        (2usize..6).prop_map(|n| GraphSpec::Perm { n }),
        (3usize..12).prop_map(|n| GraphSpec::Cycle { n }),
        (1usize..9).prop_map(|n| GraphSpec::Complete { n }),
        (2usize..12)
            .prop_flat_map(|n| (Just(n), prop::collection::vec(1..n, 0..4)))
            .prop_map(|(n, diffs)| GraphSpec::CayleyZn { n, diffs }),
        "[a-z/._ \"\\\\]{0,12}".prop_map(GraphSpec::Load),
    ]
}

fn spec_tree() -> impl Strategy<Value = GraphSpec> {
    leaf().prop_recursive(4, 24, 4, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| GraphSpec::Union(Box::new(a), Box::new(b))),
            // Children are never products themselves, matching the parser's flattening.
            prop::collection::vec(inner, 2..4).prop_map(|fs| {
                GraphSpec::Product(
                    fs.into_iter()
                        .flat_map(|f| match f {
                            GraphSpec::Product(inner) => inner,
                            other => vec![other],
                        })
                        .collect(),
                )
            }),
        ]
    })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(spec in spec_tree()) {
        let text = spec.to_string();
        prop_assert_eq!(parse_spec(&text).unwrap(), spec);
    }

    #[test]
    fn whitespace_is_insignificant(spec in spec_tree()) {
        let text = spec.to_string();
        // Spaces are only inserted outside string literals.
        prop_assume!(!text.contains('"'));
        let spaced = text.replace(',', " , ").replace('(', " ( ");
        prop_assert_eq!(parse_spec(&format!("  {spaced}\n")).unwrap(), spec);
    }

    #[test]
    fn garbage_never_panics(text in "\\PC{0,40}") {
        let _ = parse_spec(&text);
    }
}

#[test]
fn reference_examples() {
    match parse_spec("product(kneser(1,2,5), circ(2,5))").unwrap() {
        GraphSpec::Product(children) => assert_eq!(children.len(), 2),
        other => panic!("expected a product, got {other:?}"),
    }
    assert_eq!(parse_spec("perm(3)").unwrap(), GraphSpec::Perm { n: 3 });
    assert!(matches!(
        parse_spec("circ(3,5)"),
        Err(ParseError::Range { .. })
    ));
}

#[test]
fn error_classes_are_distinct() {
    let cases = [
        ("perm(3", "syntax"),
        ("petersen(3)", "unknown_constructor"),
        ("circ(2)", "arity"),
        ("perm(\"x\")", "argument_type"),
        ("kneser(3,2,5)", "range"),
    ];
    for (text, code) in cases {
        assert_eq!(parse_spec(text).unwrap_err().code(), code, "{text}");
    }
    match parse_spec("circ(2,5) x") {
        Err(ParseError::Syntax { offset, .. }) => assert_eq!(offset, 10),
        other => panic!("{other:?}"),
    }
}

#[test]
fn products_flatten_left_to_right() {
    let nested = parse_spec("product(product(perm(2),perm(3)),cycle(4))").unwrap();
    let flat = parse_spec("product(perm(2),perm(3),cycle(4))").unwrap();
    assert_eq!(nested, flat);
    assert_eq!(eval_spec(&flat).unwrap().n(), 2 * 6 * 4);
}

#[test]
fn evaluation_examples() {
    let k2 = complete_graph(2).unwrap();
    let two_k2 = graph_from_spec("circ(2,4)").unwrap();
    assert_eq!(two_k2.edges(), vec![(0, 2), (1, 3)]);
    // K2×K2 is a perfect matching on four vertices, as is circ(2,4).
    let p = graph_from_spec("product(perm(2),perm(2))").unwrap();
    assert_eq!(p.edges(), vec![(0, 3), (1, 2)]);
    assert_eq!(p.components().len(), 2);
    let u = graph_from_spec("union(complete(3),complete(3))").unwrap();
    let k3 = complete_graph(3).unwrap();
    assert_eq!(u, disjoint_union(&k3, &k3).unwrap());
    assert_eq!(graph_from_spec("perm(2)").unwrap(), k2);
    assert_eq!(
        graph_from_spec("kneser(1,2,5)").unwrap(),
        kneser_graph(1, 2, 5).unwrap()
    );
}

#[test]
fn oversized_products_are_resource_errors() {
    assert!(matches!(
        graph_from_spec("product(perm(5),perm(5),perm(5))"),
        Err(Error::Resource(_))
    ));
}
