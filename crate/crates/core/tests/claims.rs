mod common;

use common::{graph, Naive};
use ktdom::claims::{
    bound_gamma_multipartite, decompose_k_join, formula_gamma_upper_multipartite,
    formula_upper_total_cycle, formula_upper_total_path, Instance,
};
use ktdom::corpus::connected_graphs;
use ktdom::{check_claim, ClaimId, ClaimParams, Error, FamilySpec, Verdict};
use proptest::prelude::*;

fn id(n: u8) -> ClaimId {
    ClaimId::new(n).unwrap()
}

fn inst(spec: &str) -> Instance {
    Instance::from_spec(&spec.parse().unwrap()).unwrap()
}

/// Ascending part lists with the given total.
fn partitions(total: usize, min: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in min..=total {
        for mut rest in partitions(total - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn path_and_cycle_formulas_match_oracle() {
    for n in 2..=12 {
        let naive = Naive::new(&graph(&format!("P{n}")));
        assert_eq!(formula_upper_total_path(n).unwrap(), naive.upper(1), "P{n}");
        assert_eq!(
            check_claim(id(5), &ClaimParams::Order { n })
                .unwrap()
                .verdict,
            Verdict::Holds
        );
    }
    for n in (3..=12).filter(|&n| n != 8) {
        let naive = Naive::new(&graph(&format!("C{n}")));
        assert_eq!(
            formula_upper_total_cycle(n).unwrap(),
            naive.upper(1),
            "C{n}"
        );
        assert_eq!(
            check_claim(id(6), &ClaimParams::Order { n })
                .unwrap()
                .verdict,
            Verdict::Holds
        );
    }
}

#[test]
fn cycle_formula_known_discrepancy() {
    // n = 8: the formula gives 2*2 + 1 = 5, but no minimal TDS of C_8 has 5
    // vertices; {0,1,4,5} is a largest one
    assert_eq!(formula_upper_total_cycle(8).unwrap(), 5);
    let naive = Naive::new(&graph("C8"));
    let (_, _, hi, hi_set) = naive.numbers(1);
    assert_eq!((hi, hi_set), (4, vec![0, 1, 4, 5]));
    let r = check_claim(id(6), &ClaimParams::Order { n: 8 }).unwrap();
    assert_eq!(
        (r.verdict, r.observation.unwrap().value),
        (Verdict::Violated, 4)
    );
    // the same happens at n = 14 (formula 9, true value 8)
    assert_eq!(formula_upper_total_cycle(14).unwrap(), 9);
    assert_eq!(ktdom::upper_gamma_ktt(&graph("C14"), 1).unwrap().value, 8);
}

#[test]
fn multipartite_gamma_bound_and_two_large_parts() {
    for total in 2..=10 {
        for parts in partitions(total, 1).into_iter().filter(|p| p.len() >= 2) {
            let g = FamilySpec::multipartite(parts.clone()).generate().unwrap();
            for k in 1..=g.min_degree() {
                let params = ClaimParams::Parts {
                    parts: parts.clone(),
                    k,
                };
                let c9 = check_claim(id(9), &params).unwrap();
                assert_ne!(c9.verdict, Verdict::Violated, "{params}");
                if let Ok(b) = bound_gamma_multipartite(&parts, k) {
                    assert_eq!(c9.verdict, Verdict::Holds);
                    assert!(c9.observation.unwrap().value <= b);
                }
                let c8 = check_claim(id(8), &params).unwrap();
                let large = parts.iter().filter(|&&p| p >= k).count() >= 2;
                let want = if large {
                    Verdict::Holds
                } else {
                    Verdict::Inapplicable
                };
                assert_eq!(c8.verdict, want, "{params}");
            }
        }
    }
}

#[test]
fn multipartite_formula_known_discrepancies() {
    // values computed by the naive oracle
    let upper = |parts: &[usize], k| {
        Naive::new(&FamilySpec::multipartite(parts.to_vec()).generate().unwrap()).upper(k)
    };
    assert_eq!(upper(&[3, 3], 2), 4);
    assert_eq!(formula_gamma_upper_multipartite(&[3, 3], 2).unwrap(), 4);

    // K_(1,1,2,2), k = 3: the formula gives 3 + 1 but a minimal 3TDS of size 5 exists
    assert_eq!(
        formula_gamma_upper_multipartite(&[1, 1, 2, 2], 3).unwrap(),
        4
    );
    assert_eq!(upper(&[1, 1, 2, 2], 3), 5);
    let r = check_claim(
        id(7),
        &ClaimParams::Parts {
            parts: vec![1, 1, 2, 2],
            k: 3,
        },
    )
    .unwrap();
    assert_eq!(r.verdict, Verdict::Violated);

    // K_(3,3,3), k = 4: formula 4 + 2, oracle 7
    assert_eq!(formula_gamma_upper_multipartite(&[3, 3, 3], 4).unwrap(), 6);
    assert_eq!(upper(&[3, 3, 3], 4), 7);

    // K_(1,2,2), k = 3: no (l, x) fits, the formula does not apply
    assert!(matches!(
        formula_gamma_upper_multipartite(&[1, 2, 2], 3),
        Err(Error::Inapplicable(_))
    ));
    let r = check_claim(
        id(7),
        &ClaimParams::Parts {
            parts: vec![1, 2, 2],
            k: 3,
        },
    )
    .unwrap();
    assert_eq!(r.verdict, Verdict::Inapplicable);
    assert_eq!(upper(&[1, 2, 2], 3), 5);
}

#[test]
fn upper_bound_n_minus_delta_plus_k_on_corpus() {
    for n in 3..=7 {
        for g in connected_graphs(n).unwrap() {
            for k in 1..g.min_degree() {
                let r = check_claim(
                    id(10),
                    &ClaimParams::Graph {
                        g: Instance::new("g", g.clone()),
                        k,
                    },
                )
                .unwrap();
                assert_eq!(r.verdict, Verdict::Holds, "{g:?} k={k}");
            }
        }
    }
    for (b, delta, k) in [(2, 2, 1), (2, 3, 2), (3, 3, 2)] {
        let g = inst(&format!("sharp:{b},{delta},{k}"));
        let n = g.graph.n();
        let r = check_claim(id(10), &ClaimParams::Graph { g, k }).unwrap();
        assert_eq!(r.observation.unwrap().value, n - delta + k);
    }
}

#[test]
fn hypergraph_claims_on_corpus() {
    for n in 2..=7 {
        for g in connected_graphs(n).unwrap() {
            for k in 1..=g.min_degree() {
                let p = ClaimParams::Graph {
                    g: Instance::new("g", g.clone()),
                    k,
                };
                for c in [23, 24, 26] {
                    assert_eq!(
                        check_claim(id(c), &p).unwrap().verdict,
                        Verdict::Holds,
                        "C{c} {g:?} k={k}"
                    );
                }
            }
        }
    }
}

#[test]
fn k_join_decomposition_matches_ktds_sizes() {
    for n in 2..=6 {
        for g in connected_graphs(n).unwrap() {
            let naive = Naive::new(&g);
            for k in 1..=g.min_degree() {
                let lo = naive.numbers(k).0;
                for m in 1..=n {
                    let d = decompose_k_join(&g, k, m).unwrap();
                    let exists = naive
                        .subsets()
                        .any(|s| s.len() == m && naive.is_ktds(&s, k));
                    assert_eq!(d.is_some(), exists, "{g:?} k={k} m={m}");
                    assert_eq!(exists, m >= lo);
                    if let Some((core, rest)) = d {
                        assert_eq!(core.len(), m);
                        assert_eq!(core.union(&rest).len(), n);
                        assert!(core
                            .iter()
                            .all(|v| g.neighbors(v).intersection_len(&core) >= k));
                    }
                }
                let r = check_claim(
                    id(25),
                    &ClaimParams::Graph {
                        g: Instance::new("g", g.clone()),
                        k,
                    },
                )
                .unwrap();
                assert_eq!(r.verdict, Verdict::Holds);
            }
        }
    }
}

#[test]
fn rook_and_cross_product_claims() {
    for n in 3..=8 {
        for m in 3..=n {
            for k in 2..m {
                if n * m > 16 {
                    continue;
                }
                let r = check_claim(id(12), &ClaimParams::Rook { n, m, k }).unwrap();
                assert_eq!(r.verdict, Verdict::Holds, "{n} {m} {k}");
            }
        }
    }
    for k in 1..=3 {
        assert_eq!(
            check_claim(id(13), &ClaimParams::Level { k })
                .unwrap()
                .verdict,
            Verdict::Holds
        );
    }
    for n in 2..=7 {
        for k in 1..n {
            let r = check_claim(id(20), &ClaimParams::CompleteCross { n, m: 2, k }).unwrap();
            assert_eq!(r.verdict, Verdict::Holds, "n={n} k={k}");
        }
    }
    let names = ["K2", "K3", "C4", "K4"];
    for a in names {
        for b in names {
            let (g, h) = (inst(a), inst(b));
            if g.graph.n() * h.graph.n() > 16 {
                continue;
            }
            for k in 1..=g.graph.min_degree() {
                for l in 1..=h.graph.min_degree() {
                    let p = ClaimParams::CrossPair {
                        g: g.clone(),
                        h: h.clone(),
                        k,
                        l,
                    };
                    assert_eq!(
                        check_claim(id(18), &p).unwrap().verdict,
                        Verdict::Holds,
                        "{p}"
                    );
                }
                let p = ClaimParams::Pair {
                    g: g.clone(),
                    h: h.clone(),
                    k,
                };
                assert_ne!(
                    check_claim(id(19), &p).unwrap().verdict,
                    Verdict::Violated,
                    "{p}"
                );
            }
        }
    }
}

#[test]
fn external_products() {
    let names = ["K3", "K4", "C4", "C5", "cross(K4,K2)"];
    for a in names {
        for b in names {
            let (g, h) = (inst(a), inst(b));
            if g.graph.n() * h.graph.n() > 16 {
                continue;
            }
            for k in 2..=3 {
                let p = ClaimParams::Pair {
                    g: g.clone(),
                    h: h.clone(),
                    k,
                };
                for c in [15, 16, 17] {
                    assert_ne!(
                        check_claim(id(c), &p).unwrap().verdict,
                        Verdict::Violated,
                        "C{c} {p}"
                    );
                }
            }
        }
    }
}

#[test]
fn complete_multipartite_cross_points() {
    // K_3 x K_2 with k = 1: the heavy-part condition holds and so does the bound
    let r = check_claim(
        id(22),
        &ClaimParams::PartsPair {
            t: vec![1, 1, 1],
            s: vec![1, 1],
            k: 1,
        },
    )
    .unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
    // K_4 x K_2 with k = 2 meets the condition but Gamma = 2k + 2 < 4k
    let r = check_claim(
        id(22),
        &ClaimParams::PartsPair {
            t: vec![1, 1, 1, 1],
            s: vec![1, 1],
            k: 2,
        },
    )
    .unwrap();
    assert_eq!(r.verdict, Verdict::Violated);
    let naive = Naive::new(&graph("cross(K4,K2)"));
    assert_eq!(naive.upper(2), 6);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// A claim whose precondition fails is never reported violated.
    #[test]
    fn unmet_preconditions_are_never_violations(spec_i in 0usize..6, k in 1usize..5) {
        let specs = ["P4", "C5", "K4", "multipartite:1-3", "union(K2,C4)", "sharp:2,2,1"];
        let g = inst(specs[spec_i]);
        let delta = g.graph.min_degree();
        for c in [1, 2, 3, 4, 10, 11, 23, 24, 25, 26] {
            let r = check_claim(id(c), &ClaimParams::Graph { g: g.clone(), k }).unwrap();
            if k > delta {
                prop_assert_eq!(r.verdict, Verdict::Inapplicable);
            }
            if r.verdict == Verdict::Violated {
                prop_assert!(false, "C{} violated on {} k={}", c, g.name, k);
            }
        }
    }
}
