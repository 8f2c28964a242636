//! Acceptance gate: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p vtis-core --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use vtis_core::graph::{direct_product, Graph, VertexSet};
use vtis_core::mis::{
    enumerate_maximum_independent_sets, independence_number, is_is_primitive, Primitivity,
};
use vtis_core::report::{theorem_grid_pairs, THEOREM_GRID};
use vtis_core::spec::graph_from_spec;
use vtis_core::theorem::{
    classify_multifactor, classify_product, Auditor, MultiVerdict, RatioBoundVerifier, Side,
    Trigger, Verdict,
};
use vtis_core::SearchLimits;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn graph(spec: &str) -> Result<Graph, String> {
    graph_from_spec(spec).map_err(|e| format!("{spec}: {e}"))
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn limits() -> SearchLimits {
    SearchLimits::default()
}

fn ekr_grid() -> Check {
    let mut cases = 0;
    for r in 1..=3u64 {
        for n in 2 * r..=8 {
            let g = graph(&format!("kneser(1,{r},{n})"))?;
            let alpha = independence_number(&g, &limits()).map_err(fail)?;
            let expected = common::binomial(n - 1, r - 1) as usize;
            ensure(alpha == expected, || {
                format!("K(1,{r},{n}): α = {alpha}, expected {expected}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} Kneser graphs"))
}

fn circ_grid() -> Check {
    let mut cases = 0;
    for r in 1..=5 {
        for n in 2 * r..=10 {
            let g = graph(&format!("circ({r},{n})"))?;
            let alpha = independence_number(&g, &limits()).map_err(fail)?;
            ensure(alpha == r, || {
                format!("circ({r},{n}): α = {alpha}, expected {r}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} circular graphs"))
}

fn derangements() -> Check {
    let mut seen = Vec::new();
    for n in [3u64, 4, 5] {
        let g = graph(&format!("perm({n})"))?;
        let alpha = independence_number(&g, &limits()).map_err(fail)?;
        let expected = common::factorial(n - 1) as usize;
        ensure(alpha == expected, || {
            format!("perm({n}): α = {alpha}, expected {expected}")
        })?;
        seen.push(format!("α(perm({n})) = {alpha}"));
    }
    Ok(seen.join(", "))
}

fn product_formula_grid() -> Check {
    let mut factor_alpha = std::collections::HashMap::new();
    for spec in THEOREM_GRID {
        factor_alpha.insert(spec, common::brute_mis(&graph(spec)?).0);
    }
    let pairs = theorem_grid_pairs().map_err(fail)?;
    for (gs, hs, g, h) in &pairs {
        let expected = (factor_alpha[gs] * h.n()).max(factor_alpha[hs] * g.n());
        let p = direct_product(g, h).map_err(fail)?;
        let alpha = independence_number(&p, &limits()).map_err(fail)?;
        ensure(alpha == expected, || {
            format!("{gs} x {hs}: α = {alpha}, expected {expected}")
        })?;
        if p.n() <= 24 {
            let oracle = common::brute_mis(&p).0;
            ensure(oracle == alpha, || {
                format!("{gs} x {hs}: oracle α = {oracle}")
            })?;
        }
        let c = classify_product(g, h, &limits()).map_err(|e| format!("{gs} x {hs}: {e}"))?;
        trigger_holds(&c.verdict, c.trigger.as_ref(), g, h, c.ratio_g == c.ratio_h)
            .map_err(|e| format!("{gs} x {hs}: {e}"))?;
    }
    Ok(format!("{} ordered pairs", pairs.len()))
}

/// An exception verdict must come with a trigger that really holds.
fn trigger_holds(
    verdict: &Verdict,
    trigger: Option<&Trigger>,
    g: &Graph,
    h: &Graph,
    equal_ratios: bool,
) -> Result<(), String> {
    let factor = |side: &Side| if *side == Side::Left { g } else { h };
    match (verdict, trigger) {
        (Verdict::MisNormal, None) => Ok(()),
        (
            Verdict::ExceptionEqualRatioImprimitive,
            Some(Trigger::Imprimitive { factor: s, witness }),
        ) => {
            ensure(equal_ratios, || {
                "imprimitive exception with unequal ratios".into()
            })?;
            ensure(witness.is_valid_for(factor(s)), || {
                "invalid imprimitivity witness".into()
            })
        }
        (
            Verdict::ExceptionHDisconnected,
            Some(Trigger::Disconnected {
                factor: s,
                components,
            }),
        ) => {
            ensure(!equal_ratios, || {
                "disconnection exception with equal ratios".into()
            })?;
            ensure(
                components.len() > 1 && factor(s).components() == *components,
                || "claimed disconnection does not hold".into(),
            )
        }
        _ => Err(format!("verdict {verdict:?} with trigger {trigger:?}")),
    }
}

fn normal_positive_case() -> Check {
    let g = graph("kneser(1,2,5)")?;
    let h = graph("circ(2,5)")?;
    let c = classify_product(&g, &h, &limits()).map_err(fail)?;
    ensure(c.verdict == Verdict::MisNormal, || {
        format!("verdict {:?}", c.verdict)
    })?;
    ensure(c.mis_count == 10, || {
        format!("{} maximum sets", c.mis_count)
    })?;
    ensure((c.left_preimages, c.right_preimages) == (5, 5), || {
        format!("attributed {} / {}", c.left_preimages, c.right_preimages)
    })?;
    // The expected family: A × V(H) for the maximum sets A of the Petersen
    // graph and V(G) × B for those of the 5-cycle, built here from the factors.
    let (_, ga) = common::brute_mis(&g);
    let (_, hb) = common::brute_mis(&h);
    let (gn, hn) = (g.n(), h.n());
    let mut expected: Vec<Vec<usize>> = ga
        .iter()
        .map(|a| {
            a.iter()
                .flat_map(|&u| (0..hn).map(move |v| u * hn + v))
                .collect()
        })
        .chain(hb.iter().map(|b| {
            let mut s: Vec<usize> = (0..gn)
                .flat_map(|u| b.iter().map(move |&v| u * hn + v))
                .collect();
            s.sort_unstable();
            s
        }))
        .collect();
    expected.sort();
    let family =
        enumerate_maximum_independent_sets(&direct_product(&g, &h).map_err(fail)?, &limits())
            .map_err(fail)?;
    let got: Vec<Vec<usize>> = family.sets.iter().map(|s| s.as_slice().to_vec()).collect();
    ensure(got == expected, || {
        "family differs from the factor preimages".into()
    })?;
    Ok("10 sets, 5 from each factor".into())
}

fn equal_ratio_exception() -> Check {
    let g = graph("perm(3)")?;
    let c = classify_product(&g, &g, &limits()).map_err(fail)?;
    ensure(c.verdict == Verdict::ExceptionEqualRatioImprimitive, || {
        format!("verdict {:?}", c.verdict)
    })?;
    let w = c.witness.ok_or("no witness")?;
    let s = w.as_slice();
    let size = (common::factorial(2) * common::factorial(3)) as usize;
    ensure(s.len() == size && c.alpha == size, || {
        format!("witness size {}", s.len())
    })?;
    let independent = s
        .iter()
        .all(|&x| s.iter().all(|&y| !common::product_adjacent(&g, &g, x, y)));
    ensure(independent, || "witness is not independent".into())?;
    ensure(!common::is_product_preimage(s, &g, &g), || {
        "witness is a preimage".into()
    })?;
    Ok(format!("witness {s:?}"))
}

fn disconnected_exception() -> Check {
    let g = graph("complete(2)")?;
    let h = graph("union(complete(3),complete(3))")?;
    let c = classify_product(&g, &h, &limits()).map_err(fail)?;
    ensure(c.verdict == Verdict::ExceptionHDisconnected, || {
        format!("verdict {:?}", c.verdict)
    })?;
    let p = direct_product(&g, &h).map_err(fail)?;
    let (alpha, all) = common::brute_mis(&p);
    ensure(c.alpha == 6 && alpha == 6, || {
        format!("α = {}, oracle {alpha}", c.alpha)
    })?;
    ensure(c.mis_count == all.len(), || {
        format!("{} sets, oracle {}", c.mis_count, all.len())
    })?;
    let w = c.witness.ok_or("no witness")?;
    let s = w.as_slice();
    // H's components are {0,1,2} and {3,4,5}; mixed means the H-coordinates
    // of the witness touch both.
    let touches = |lo: usize| s.iter().any(|&x| (lo..lo + 3).contains(&(x % h.n())));
    ensure(touches(0) && touches(3), || {
        format!("witness {s:?} is not mixed")
    })?;
    ensure(!common::is_product_preimage(s, &g, &h), || {
        "witness is a preimage".into()
    })?;
    Ok(format!("α = 6, witness {s:?}"))
}

/// Test-side definition: a nonempty independent `A` with `|A| < α` and
/// `|A|·|V| = α·|N[A]|`.
fn oracle_imprimitive(g: &Graph) -> bool {
    let all = common::all_independent_masks(g);
    let alpha = all.iter().map(|m| m.count_ones()).max().unwrap() as usize;
    all.iter().any(|&m| {
        let a = common::bits(m, g.n());
        !a.is_empty()
            && a.len() < alpha
            && a.len() * g.n() == alpha * common::closed_nbhd_size(g, &a)
    })
}

fn primitivity() -> Check {
    let cases = [
        ("circ(2,4)", false),
        ("circ(2,5)", true),
        ("cycle(6)", true),
        ("kneser(1,2,5)", true),
        ("perm(3)", false),
    ];
    for (spec, primitive) in cases {
        let g = graph(spec)?;
        ensure(oracle_imprimitive(&g) != primitive, || {
            format!("{spec}: oracle disagrees")
        })?;
        match is_is_primitive(&g, &limits()).map_err(fail)? {
            Primitivity::Primitive => ensure(primitive, || format!("{spec}: reported primitive"))?,
            Primitivity::Imprimitive { witness } => {
                ensure(!primitive, || format!("{spec}: reported imprimitive"))?;
                ensure(witness.is_valid_for(&g), || {
                    format!("{spec}: invalid witness")
                })?;
                if spec == "circ(2,4)" {
                    ensure(witness.set.len() == 1, || {
                        "circ(2,4) witness not a singleton".into()
                    })?;
                }
            }
            Primitivity::Unknown { reason } => return Err(format!("{spec}: unknown ({reason})")),
        }
    }
    Ok("circ(2,4), perm(3) imprimitive; circ(2,5), cycle(6), kneser(1,2,5) primitive".into())
}

fn audit_grid() -> Check {
    let mut audited = 0;
    let pairs = theorem_grid_pairs().map_err(fail)?;
    for (gs, hs, g, h) in &pairs {
        let auditor = Auditor::new(g, h, &limits()).map_err(fail)?;
        let family =
            enumerate_maximum_independent_sets(auditor.product(), &limits()).map_err(fail)?;
        for s in &family.sets {
            let audit = auditor.audit(s).map_err(|e| format!("{gs} x {hs}: {e}"))?;
            if let Some(bad) = audit.failures().next() {
                return Err(format!(
                    "{gs} x {hs}: set {:?} fails {} ({:?})",
                    s.as_slice(),
                    bad.tag,
                    bad.counterexample
                ));
            }
            audited += 1;
        }
    }
    Ok(format!(
        "{audited} maximum sets over {} products",
        pairs.len()
    ))
}

fn multifactor() -> Check {
    let k2 = graph("complete(2)")?;
    let c5 = graph("circ(2,5)")?;
    let run = |factors: &[Graph]| classify_multifactor(factors, true, &limits()).map_err(fail);

    let r = run(&[k2.clone(), k2.clone()])?;
    ensure(r.predicted == MultiVerdict::MisNormal, || {
        "[K2,K2] not normal".into()
    })?;

    let r = run(&[k2.clone(), k2.clone(), k2.clone()])?;
    ensure(
        r.predicted == MultiVerdict::NotNormal && r.plan.ell == 3,
        || format!("[K2,K2,K2]: {:?} with ell {}", r.predicted, r.plan.ell),
    )?;
    let cc = r.cross_check.ok_or("no cross-check")?;
    let w = cc.witness.ok_or("no witness")?;
    // Test-side check in the 8-vertex product: K2×K2×K2 is 4K2 with
    // (a,b,c) adjacent to its bitwise complement.
    let s = w.as_slice();
    ensure(s.iter().all(|&x| s.iter().all(|&y| x ^ y != 7)), || {
        "witness not independent".into()
    })?;
    let fixed_coordinate = (0..3).any(|bit| {
        s.iter().all(|&x| x >> (2 - bit) & 1 == 0) || s.iter().all(|&x| x >> (2 - bit) & 1 == 1)
    });
    ensure(s.len() == 4 && !fixed_coordinate, || {
        format!("witness {s:?} is a preimage")
    })?;

    let r = run(&[c5.clone(), c5.clone()])?;
    let cc = r.cross_check.ok_or("no cross-check")?;
    ensure(r.predicted == MultiVerdict::MisNormal, || {
        "[C5,C5] not normal".into()
    })?;
    ensure(cc.mis_count == 10 && cc.preimage_count == 10, || {
        format!(
            "[C5,C5]: {} sets, {} preimages",
            cc.mis_count, cc.preimage_count
        )
    })?;
    Ok(format!("[K2,K2,K2] witness {s:?}"))
}

fn oracle_equivalence() -> Check {
    let mut total_sets = 0;
    for seed in 0..200u64 {
        let n = 2 + (seed as usize % 17);
        let density = 0.1 * (1 + seed % 9) as f64;
        let g = common::random_graph(1000 + seed, n, density);
        let (alpha, sets) = common::brute_mis(&g);
        let family = enumerate_maximum_independent_sets(&g, &limits()).map_err(fail)?;
        let got: Vec<Vec<usize>> = family.sets.iter().map(|s| s.as_slice().to_vec()).collect();
        ensure(family.alpha == alpha && got == sets, || {
            format!("seed {seed} (n = {n}, p = {density:.1}): solver differs from oracle")
        })?;
        total_sets += sets.len();
    }
    Ok(format!("200 graphs, {total_sets} maximum sets"))
}

fn ratio_bound_sweep() -> Check {
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for spec in THEOREM_GRID {
        graphs.push((spec.to_string(), graph(spec)?));
    }
    for (gs, hs, g, h) in theorem_grid_pairs().map_err(fail)? {
        if g.n() * h.n() <= 24 {
            graphs.push((
                format!("{gs} x {hs}"),
                direct_product(&g, &h).map_err(fail)?,
            ));
        }
    }
    let (mut sets, mut equalities) = (0usize, 0usize);
    for (name, g) in &graphs {
        let (alpha, maxima) = common::brute_mis(g);
        let adj = common::adjacency_masks(g);
        let maxima: Vec<u64> = maxima
            .iter()
            .map(|s| s.iter().fold(0, |m, &v| m | 1 << v))
            .collect();
        let verifier = RatioBoundVerifier::new(g, &limits()).map_err(fail)?;
        for a in common::all_independent_masks(g) {
            let closed = common::bits(a, g.n()).iter().fold(a, |m, &v| m | adj[v]);
            let (size, closed_size) = (a.count_ones() as usize, closed.count_ones() as usize);
            let lhs = size * g.n();
            let rhs = alpha * closed_size;
            ensure(lhs <= rhs, || {
                format!("{name}: bound fails for {:?}", common::bits(a, g.n()))
            })?;
            let report = verifier
                .check(&VertexSet::new(g.n(), common::bits(a, g.n())).map_err(fail)?)
                .map_err(fail)?;
            ensure(report.holds && report.equality == (lhs == rhs), || {
                format!(
                    "{name}: library report disagrees on {:?}",
                    common::bits(a, g.n())
                )
            })?;
            if lhs == rhs && a != 0 {
                equalities += 1;
                let meets = maxima
                    .iter()
                    .all(|&s| (s & closed).count_ones() as usize == size);
                let extends = maxima.iter().any(|&s| s & a == a);
                ensure(meets && extends, || {
                    format!(
                        "{name}: equality consequence fails for {:?}",
                        common::bits(a, g.n())
                    )
                })?;
                ensure(report.passed(), || {
                    format!("{name}: library equality consequences fail")
                })?;
            }
            sets += 1;
        }
    }
    Ok(format!(
        "{} graphs, {sets} independent sets, {equalities} equality cases",
        graphs.len()
    ))
}

struct Criterion {
    name: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            name: "EKR grid",
            limit: Duration::from_secs(10),
            run: ekr_grid,
        },
        Criterion {
            name: "circulant grid",
            limit: Duration::from_secs(5),
            run: circ_grid,
        },
        Criterion {
            name: "derangement graphs",
            limit: Duration::from_secs(60),
            run: derangements,
        },
        Criterion {
            name: "product formula grid",
            limit: Duration::from_secs(180),
            run: product_formula_grid,
        },
        Criterion {
            name: "normal product",
            limit: Duration::from_secs(120),
            run: normal_positive_case,
        },
        Criterion {
            name: "equal-ratio exception",
            limit: Duration::from_secs(120),
            run: equal_ratio_exception,
        },
        Criterion {
            name: "disconnected exception",
            limit: Duration::from_secs(10),
            run: disconnected_exception,
        },
        Criterion {
            name: "primitivity",
            limit: Duration::from_secs(30),
            run: primitivity,
        },
        Criterion {
            name: "decomposition audit",
            limit: Duration::from_secs(180),
            run: audit_grid,
        },
        Criterion {
            name: "multi-factor",
            limit: Duration::from_secs(60),
            run: multifactor,
        },
        Criterion {
            name: "oracle equivalence",
            limit: Duration::from_secs(120),
            run: oracle_equivalence,
        },
        Criterion {
            name: "ratio bound sweep",
            limit: Duration::from_secs(120),
            run: ratio_bound_sweep,
        },
    ];
    let mut failures = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.limit => {
                Err(format!("{detail}; took {elapsed:.2?}, limit {:?}", c.limit))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {} ({elapsed:.2?}): {detail}", i + 1, c.name),
            Err(reason) => {
                failures += 1;
                println!("FAIL {:>2} {} ({elapsed:.2?}): {reason}", i + 1, c.name);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
