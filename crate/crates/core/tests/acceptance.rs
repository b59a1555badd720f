//! End-to-end acceptance checks. Each test prints a single PASS/FAIL line
//! (visible with `--nocapture`) and fails on any mismatch.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use kmetric::complete::{bipartite_solve, clique_solve};
use kmetric::path::{path_ap, path_nl, PathMetric};
use kmetric::wheel::{
    check_condition, cycle_bits, cyclic_string_is_valid, derive_boundary_sets, wheel_dp,
    wheel_solve, Variant,
};
use kmetric::{
    is_landmark_set, Family, Graph, Model, Oracle, ProblemSpec, Solution, Weight, Weights,
};

type Check = Result<(), String>;

fn report(id: u32, name: &str, check: impl FnOnce() -> Check) {
    let start = Instant::now();
    let result = check();
    let elapsed = start.elapsed();
    match &result {
        Ok(()) => println!("PASS [{id:>2}] {name} ({elapsed:.2?})"),
        Err(e) => println!("FAIL [{id:>2}] {name} ({elapsed:.2?}): {e}"),
    }
    if let Err(e) = result {
        panic!("criterion {id} failed: {e}");
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant, what: &str) -> Check {
    let took = start.elapsed();
    ensure(took < limit, || {
        format!("{what} took {took:.2?}, limit {limit:.2?}")
    })
}

fn spec(model: Model, k: usize) -> ProblemSpec {
    ProblemSpec::new(model, k).unwrap()
}

fn oracle_weight(g: &Graph, spec: &ProblemSpec) -> Solution {
    Oracle::default().min_weight(g, spec).unwrap()
}

#[test]
fn c01_path_cardinality_formulas() {
    report(1, "path cardinality formulas, n <= 30", || {
        let start = Instant::now();
        for n in 2..=30 {
            let unit = Weights::unit(n);
            for k in 1..=n + 1 {
                let ap = path_ap(n, k, &unit)
                    .map_err(|e| e.to_string())?
                    .cardinality();
                let want_ap = match k {
                    1 => Some(1),
                    2 => Some(2),
                    _ if k < n => Some(k + 1),
                    _ => None,
                };
                ensure(ap == want_ap, || {
                    format!("AP n={n} k={k}: {ap:?} != {want_ap:?}")
                })?;
                let nl = path_nl(n, k, &unit)
                    .map_err(|e| e.to_string())?
                    .cardinality();
                let want_nl = if n >= k + 2 { k } else { n - 1 };
                ensure(nl == Some(want_nl), || {
                    format!("NL n={n} k={k}: {nl:?} != {want_nl}")
                })?;
            }
        }
        within(Duration::from_secs(1), start, "path formula sweep")
    });
}

#[test]
fn c02_path_solver_matches_oracle() {
    report(
        2,
        "path solvers equal the oracle, n <= 12, 101 weight vectors",
        || {
            let mut rng = common::rng(2);
            for n in 2..=12 {
                let g = Graph::path(n).unwrap();
                for k in 1..=n + 1 {
                    for model in Model::BOTH {
                        for trial in 0..=100 {
                            let weights = if trial == 0 {
                                Weights::unit(n)
                            } else {
                                common::random_weights(&mut rng, n)
                            };
                            let sp = spec(model, k).with_weights(weights);
                            let fast =
                                kmetric::path::path_solve(n, &sp).map_err(|e| e.to_string())?;
                            let slow = oracle_weight(&g, &sp);
                            ensure(fast.weight() == slow.weight(), || {
                                format!(
                                    "n={n} k={k} {model} trial {trial}: {:?} vs oracle {:?}",
                                    fast.weight(),
                                    slow.weight()
                                )
                            })?;
                            if let Some(set) = fast.landmarks() {
                                ensure(is_landmark_set(&PathMetric { n }, set, model, k), || {
                                    format!("n={n} k={k} {model}: witness {set:?} is not a landmark set")
                                })?;
                            }
                        }
                    }
                }
            }
            Ok(())
        },
    );
}

#[test]
fn c03_clique_and_bipartite_match_oracle() {
    report(
        3,
        "clique and complete bipartite closed forms equal the oracle",
        || {
            let oracle = Oracle::default();
            let compare = |family: Family, n: usize| -> Check {
                let g = Graph::from_family(family).unwrap();
                for k in 1..=n + 1 {
                    for model in Model::BOTH {
                        let sp = spec(model, k);
                        let fast = match family {
                            Family::Clique(n) => clique_solve(n, &sp),
                            Family::Bipartite(a, b) => bipartite_solve(a, b, &sp),
                            _ => unreachable!(),
                        }
                        .map_err(|e| e.to_string())?;
                        let slow = oracle.min_weight(&g, &sp).unwrap();
                        let card = oracle.min_cardinality(&g, &sp).unwrap().cardinality();
                        ensure(
                            fast.weight() == slow.weight() && fast.cardinality() == card,
                            || {
                                format!(
                                    "{family} k={k} {model}: {:?} vs oracle {card:?}",
                                    fast.cardinality()
                                )
                            },
                        )?;
                        let want = match (model, k) {
                            (Model::AllPairs, 1) => match family {
                                Family::Clique(n) => Some(n - 1),
                                _ => Some(n - 2),
                            },
                            (Model::AllPairs, 2) => match family {
                                Family::Bipartite(1, _) | Family::Bipartite(_, 1) => Some(n - 1),
                                _ => Some(n),
                            },
                            (Model::AllPairs, _) => None,
                            (Model::NonLandmarks, k) => match family {
                                Family::Bipartite(..) if n >= k + 2 => Some(n - 2),
                                _ => Some(n - 1),
                            },
                        };
                        ensure(fast.cardinality() == want, || {
                            format!(
                                "{family} k={k} {model}: {:?} != {want:?}",
                                fast.cardinality()
                            )
                        })?;
                    }
                }
                Ok(())
            };
            for n in 2..=10 {
                compare(Family::Clique(n), n)?;
            }
            for a in 1..=9 {
                for b in 1..=10 - a {
                    if a + b >= 3 {
                        compare(Family::Bipartite(a, b), a + b)?;
                    }
                }
            }
            Ok(())
        },
    );
}

fn wheel_card(n: usize, model: Model, k: usize) -> Result<Option<usize>, String> {
    wheel_solve(n, &spec(model, k))
        .map(|s| s.cardinality())
        .map_err(|e| e.to_string())
}

#[test]
fn c04_wheel_cardinality_tables() {
    report(4, "wheel cardinality tables, n <= 60", || {
        let start = Instant::now();
        let expect = |n: usize, model: Model, k: usize, want: Option<usize>| -> Check {
            let got = wheel_card(n, model, k)?;
            ensure(got == want, || {
                format!("n={n} {model} k={k}: {got:?} != {want:?}")
            })
        };
        for n in 6..=60 {
            if n >= 8 {
                expect(n, Model::AllPairs, 2, Some(n / 2))?;
                expect(n, Model::NonLandmarks, 2, Some(n / 2))?;
            }
            if n >= 7 {
                expect(n, Model::AllPairs, 3, Some(4 * n / 5))?;
                expect(n, Model::AllPairs, 4, Some(n - 1))?;
            }
            if n >= 9 {
                expect(n, Model::NonLandmarks, 3, Some(2 * n / 3))?;
                expect(n, Model::NonLandmarks, 4, Some(2 * n / 3))?;
            }
            for k in 5..=8.max(if n <= 12 { n + 1 } else { 0 }) {
                expect(n, Model::AllPairs, k, None)?;
            }
        }
        expect(8, Model::NonLandmarks, 3, Some(5))?;
        expect(6, Model::AllPairs, 4, Some(6))?;
        for k in 5..=7 {
            for n in 6..=30 {
                let want = if n >= k + 4 { n - 2 } else { n - 1 };
                expect(n, Model::NonLandmarks, k, Some(want))?;
            }
        }
        within(Duration::from_secs(10), start, "wheel tables")
    });
}

#[test]
fn c05_wheel_five_closed_forms() {
    report(
        5,
        "five-vertex wheel closed forms, 200 weight vectors",
        || {
            let mut rng = common::rng(5);
            let g = Graph::wheel(5).unwrap();
            for trial in 0..200 {
                let weights = common::random_weights(&mut rng, 5);
                let w = |v: usize| weights.get(v);
                let cycle: Weight = (0..4).map(w).sum();
                let all = cycle + w(4);
                let pair_max = (0..4).map(|i| w(i) + w((i + 1) % 4)).max().unwrap();
                let single_max = (0..4).map(w).max().unwrap();
                let formulas = [
                    (Model::AllPairs, 2, Some(cycle)),
                    (Model::AllPairs, 3, None),
                    (Model::NonLandmarks, 2, Some(cycle.min(all - pair_max))),
                    (Model::NonLandmarks, 3, Some(cycle.min(all - single_max))),
                    (Model::NonLandmarks, 4, Some(cycle.min(all - single_max))),
                    (Model::NonLandmarks, 5, Some(cycle.min(all - single_max))),
                ];
                for (model, k, want) in formulas {
                    let sp = spec(model, k).with_weights(weights.clone());
                    let got = wheel_solve(5, &sp).map_err(|e| e.to_string())?.weight();
                    let slow = oracle_weight(&g, &sp).weight();
                    ensure(got == want && slow == want, || {
                        format!("trial {trial} {model} k={k}: solver {got:?}, oracle {slow:?}, formula {want:?}")
                    })?;
                }
            }
            Ok(())
        },
    );
}

const DP_CASES: [(Model, usize); 5] = [
    (Model::AllPairs, 2),
    (Model::AllPairs, 3),
    (Model::NonLandmarks, 2),
    (Model::NonLandmarks, 3),
    (Model::NonLandmarks, 4),
];

#[test]
fn c06_wheel_dp_matches_oracle() {
    report(
        6,
        "wheel DP equals the oracle, 9 <= n <= 14, 51 weight vectors",
        || {
            let mut rng = common::rng(6);
            for n in 9..=14 {
                let g = Graph::wheel(n).unwrap();
                let d = g.distances();
                for (model, k) in DP_CASES {
                    let variant = Variant::for_problem(model, k).unwrap();
                    for trial in 0..=50 {
                        let weights = if trial == 0 {
                            Weights::unit(n)
                        } else {
                            common::random_weights(&mut rng, n)
                        };
                        let fast = wheel_dp(n, variant, &weights).map_err(|e| e.to_string())?;
                        let slow = oracle_weight(&g, &spec(model, k).with_weights(weights));
                        ensure(fast.weight() == slow.weight(), || {
                            format!(
                                "n={n} {model} k={k} trial {trial}: {:?} vs oracle {:?}",
                                fast.weight(),
                                slow.weight()
                            )
                        })?;
                        let set = fast.landmarks().unwrap();
                        ensure(is_landmark_set(&d, set, model, k), || {
                            format!("n={n} {model} k={k}: witness {set:?} is not a landmark set")
                        })?;
                    }
                }
            }
            Ok(())
        },
    );
}

#[test]
fn c07_window_rule_condition_and_distances_agree() {
    report(
        7,
        "window rule, local condition and distances agree on all cycle subsets",
        || {
            for n in 9..=13 {
                let d = Graph::wheel(n).unwrap().distances();
                for variant in Variant::ALL {
                    for mask in 0..1u32 << (n - 1) {
                        let set: Vec<usize> = (0..n - 1).filter(|&i| mask >> i & 1 == 1).collect();
                        let by_window = cyclic_string_is_valid(variant, &cycle_bits(&set, n));
                        let by_condition = check_condition(variant, &set, n).unwrap();
                        ensure(by_window == by_condition, || {
                            format!("n={n} {variant} {set:?}: window vs condition")
                        })?;
                        for &k in variant.ks() {
                            let by_distance = is_landmark_set(&d, &set, variant.model(), k);
                            ensure(by_window == by_distance, || {
                                format!("n={n} {variant} k={k} {set:?}: window {by_window}, distances {by_distance}")
                            })?;
                        }
                    }
                }
            }
            Ok(())
        },
    );
}

fn strings(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

#[test]
fn c08_boundary_sets() {
    report(
        8,
        "derived boundary string sets match the known listings",
        || {
            let ap2 = strings(&[
                "1111", "1110", "1101", "1011", "0111", "1100", "1010", "1001", "0110", "0101",
                "0011",
            ]);
            let listings = [
                (Variant::ApK2, ap2),
                (
                    Variant::ApK3,
                    strings(&["1111", "1110", "1101", "1011", "0111"]),
                ),
                (
                    Variant::NlK2,
                    strings(&["111", "110", "101", "100", "011", "010", "001"]),
                ),
                (Variant::NlK34, strings(&["11", "10", "01"])),
            ];
            for (variant, want) in listings {
                let sets = derive_boundary_sets(variant);
                ensure(sets.string_texts() == want, || {
                    format!("{variant}: {:?}", sets.string_texts())
                })?;
                ensure(sets.strings.len() <= 11, || {
                    format!("{variant}: {} strings", sets.strings.len())
                })?;
            }
            let pairs: BTreeSet<(String, String)> = [
                ("11", "11"),
                ("11", "10"),
                ("11", "01"),
                ("10", "11"),
                ("10", "01"),
                ("01", "11"),
            ]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
            let got = derive_boundary_sets(Variant::NlK34).pair_texts();
            ensure(got == pairs, || format!("NL k=3,4 pairs: {got:?}"))
        },
    );
}

#[test]
fn c09_property_suite() {
    report(9, "randomized properties, 500+ trials each", || {
        let mut rng = common::rng(9);
        let trials = 600;
        let mut ap_feasible_seen = 0;
        let mut k_feasible_seen = 0;
        for t in 0..trials {
            let n = 2 + t % 11;
            let g = common::random_graph(&mut rng, n, 0.4);
            let d = g.distances();
            let l = common::random_subset(&mut rng, n, 0.6);

            for (i, &u) in l.iter().enumerate() {
                for &v in &l[i + 1..] {
                    let count = kmetric::sps(&d, &l, u, v).unwrap().len();
                    ensure(count >= 2, || {
                        format!("trial {t}: landmarks {u},{v} separated {count} times")
                    })?;
                }
            }
            for k in 1..=4 {
                let ap = is_landmark_set(&d, &l, Model::AllPairs, k);
                ensure(
                    !ap || is_landmark_set(&d, &l, Model::NonLandmarks, k),
                    || format!("trial {t} k={k}: AP feasible but NL not"),
                )?;
                ap_feasible_seen += usize::from(ap);
                for model in Model::BOTH {
                    let higher = is_landmark_set(&d, &l, model, k + 1);
                    ensure(!higher || is_landmark_set(&d, &l, model, k), || {
                        format!("trial {t} {model}: feasible for k={} but not k={k}", k + 1)
                    })?;
                    k_feasible_seen += usize::from(higher);
                }
            }
        }
        ensure(ap_feasible_seen > 0 && k_feasible_seen > 0, || {
            "no feasible instance was sampled".into()
        })?;

        let mut hub_trials = 0;
        for n in 9..=12 {
            let d = Graph::wheel(n).unwrap().distances();
            let hub = n - 1;
            for (model, k) in DP_CASES {
                for mask in 0..1u32 << (n - 1) {
                    let cycle: Vec<usize> = (0..n - 1).filter(|&i| mask >> i & 1 == 1).collect();
                    let mut with_hub = cycle.clone();
                    with_hub.push(hub);
                    if is_landmark_set(&d, &with_hub, model, k) {
                        hub_trials += 1;
                        ensure(is_landmark_set(&d, &cycle, model, k), || {
                            format!("n={n} {model} k={k}: {with_hub:?} feasible but not without the hub")
                        })?;
                    }
                }
            }
        }
        ensure(hub_trials >= 500, || {
            format!("only {hub_trials} hub-dropping cases")
        })
    });
}

#[test]
fn c10_linear_time() {
    report(
        10,
        "wheel DP at n = 100000 and weighted path at n = 20000 under 1 s",
        || {
            let mut rng = common::rng(10);
            let n = 100_000;
            let weights = common::random_weights(&mut rng, n);
            for variant in Variant::ALL {
                let start = Instant::now();
                let sol = wheel_dp(n, variant, &weights).map_err(|e| e.to_string())?;
                within(
                    Duration::from_secs(1),
                    start,
                    &format!("wheel DP {variant}"),
                )?;
                let set = sol.landmarks().unwrap();
                ensure(cyclic_string_is_valid(variant, &cycle_bits(set, n)), || {
                    format!("{variant}: invalid witness")
                })?;
            }
            let n = 20_000;
            let weights = common::random_weights(&mut rng, n);
            for k in [2, 500, 5_000, 13_000] {
                assert!(2 * n > 3 * k + 2);
                let start = Instant::now();
                let sol = path_nl(n, k, &weights).map_err(|e| e.to_string())?;
                within(Duration::from_secs(1), start, &format!("path NL k={k}"))?;
                let card = sol.cardinality().unwrap();
                ensure(card == k || card == k + 1, || {
                    format!("path NL k={k}: cardinality {card}")
                })?;
            }
            Ok(())
        },
    );
}
