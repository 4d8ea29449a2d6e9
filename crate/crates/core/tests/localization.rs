use proptest::prelude::*;
use realgw::arith::rational::{int, rat};
use realgw::hodge::{i1, i2};
use realgw::localization::*;
use realgw::{Rational, RationalFunction};

fn c(q: Rational) -> RationalFunction {
    RationalFunction::constant(q)
}

fn z() -> RationalFunction {
    RationalFunction::z()
}

fn lin(a: i64, b: i64) -> RationalFunction {
    RationalFunction::linear(int(a), int(b))
}

fn sgn(k: u32) -> RationalFunction {
    c(if k % 2 == 0 { int(1) } else { int(-1) })
}

#[derive(Debug, PartialEq)]
enum Diagram {
    FixedAtOne { same: bool },
    FixedAtThree { same: bool },
    TwoFixed { same: bool },
    Square,
    Loop,
}

/// Shape of a degree 3 or 4 class, with the genera at the 1- and 3-labelled pairs.
fn classify(pair: &AdmissiblePair) -> (Diagram, u32, u32) {
    let k = pair.key();
    let one = k.pairs.iter().position(|p| p.0 == 1).unwrap();
    let three = k.pairs.iter().position(|p| p.0 == 3).unwrap();
    let (g1, g2) = (k.pairs[one].1, k.pairs[three].1);
    let fixed: Vec<usize> =
        k.orbits.iter().filter_map(|o| if let Orbit::Fixed { p, .. } = o { Some(*p) } else { None }).collect();
    let same = k.orbits.iter().filter(|o| matches!(o, Orbit::Same { .. })).count();
    let cross_self = k.orbits.iter().any(|o| matches!(o, Orbit::Cross { p, q, .. } if p == q));
    let d = match (fixed.as_slice(), same) {
        (_, _) if cross_self => Diagram::Loop,
        ([a, b], _) if a == b => Diagram::Loop,
        ([p], s) if *p == one => Diagram::FixedAtOne { same: s == 1 },
        ([p], s) if *p == three => Diagram::FixedAtThree { same: s == 1 },
        ([_, _], s) => Diagram::TwoFixed { same: s == 1 },
        ([], 1) => Diagram::Square,
        other => panic!("unexpected class {other:?}"),
    };
    (d, g1, g2)
}

fn pair_with_edge(labels: Vec<u8>, edges: Vec<(usize, usize, u32)>, sigma_e: Vec<usize>) -> AdmissiblePair {
    let n = labels.len();
    let graph = DecoratedGraph {
        genera: vec![0; n],
        labels,
        edges: edges.into_iter().map(|(a, b, d)| Edge { ends: (a, b), degree: d }).collect(),
        markings: vec![0, 1],
    };
    let inv = GraphInvolution { vertices: (0..n).map(|v| v ^ 1).collect(), edges: sigma_e };
    AdmissiblePair::new(graph, inv).unwrap()
}

#[test]
fn degree_one_classes() {
    for g in [0, 2, 4, 6] {
        let pairs = enumerate_pairs(g, 1);
        assert_eq!(pairs.len(), 1);
        let p = &pairs[0];
        assert_eq!(p.fixed_edges().len(), 1);
        assert_eq!(p.graph().genera, vec![g / 2, g / 2]);
        assert_eq!(p.graph().labels[p.graph().markings[0]], 1);
    }
    assert!(enumerate_pairs(1, 1).is_empty());
}

#[test]
fn class_counts() {
    assert_eq!(enumerate_pairs(0, 3).len(), 4);
    assert_eq!(enumerate_pairs(2, 3).len(), 8);
    assert_eq!(enumerate_pairs(1, 4).len(), 11);
    let loops = enumerate_pairs(1, 4).iter().filter(|p| classify(p).0 == Diagram::Loop).count();
    assert_eq!(loops, 8);
    for p in enumerate_pairs(1, 4) {
        if classify(&p).0 == Diagram::Loop {
            assert_eq!(p.automorphisms(), 2);
        }
    }
}

#[test]
fn edge_weights() {
    let w = Weights::generic();
    let p = &enumerate_pairs(0, 1)[0];
    let v = p.graph().markings[0];
    assert_eq!(psi_edge_weight(p, 0, v, &w), c(int(-2)));
    let three = pair_with_edge(vec![1, 2], vec![(0, 1, 3)], vec![0]);
    assert_eq!(psi_edge_weight(&three, 0, 0, &w), c(rat(-2, 3)));
    let free = pair_with_edge(vec![1, 2, 3, 4], vec![(0, 2, 1), (1, 3, 1), (0, 1, 1)], vec![1, 0, 2]);
    assert_eq!(psi_edge_weight(&free, 0, 0, &w), lin(-1, 1));
}

#[test]
fn edge_factors() {
    let w = Weights::generic();
    let one_minus_z2 = &c(int(1)) - &(&z() * &z());
    let p = &enumerate_pairs(0, 1)[0];
    assert_eq!(edge_contribution(p, 0, &w).unwrap(), one_minus_z2.recip().unwrap());
    let free13 = pair_with_edge(vec![1, 2, 3, 4], vec![(0, 2, 1), (1, 3, 1), (0, 1, 1)], vec![1, 0, 2]);
    let want = c(rat(-1, 4)).checked_div(&(&z() * &(&lin(1, 1) * &lin(1, 1)))).unwrap();
    assert_eq!(edge_contribution(&free13, 0, &w).unwrap(), want);
    let free14 = pair_with_edge(vec![1, 2, 3, 4], vec![(0, 3, 1), (2, 1, 1), (0, 1, 1)], vec![1, 0, 2]);
    let want = c(rat(1, 4)).checked_div(&(&z() * &(&lin(1, -1) * &lin(1, -1)))).unwrap();
    assert_eq!(edge_contribution(&free14, 0, &w).unwrap(), want);
}

#[test]
fn fixed_edge_endpoint_symmetry() {
    let w = Weights::generic();
    for d in [1, 3, 5] {
        assert_eq!(fixed_edge_factor(1, d, &w).unwrap(), fixed_edge_factor(2, d, &w).unwrap());
        assert_eq!(fixed_edge_factor(3, d, &w).unwrap(), fixed_edge_factor(4, d, &w).unwrap());
    }
    assert!(fixed_edge_factor(1, 2, &w).is_err());
}

#[test]
fn even_fixed_edge_is_rejected() {
    let graph = DecoratedGraph { labels: vec![1, 2], genera: vec![0, 0], edges: vec![Edge { ends: (0, 1), degree: 2 }], markings: vec![] };
    let inv = GraphInvolution { vertices: vec![1, 0], edges: vec![0] };
    assert!(AdmissiblePair::new(graph, inv).is_err());
}

#[test]
fn degree_one_vertices() {
    let w = Weights::generic();
    let one_minus_z2 = &c(int(1)) - &(&z() * &z());
    let p = &enumerate_pairs(0, 1)[0];
    let v = p.graph().markings[0];
    assert_eq!(vertex_contribution(p, v, &w).unwrap(), one_minus_z2);
    for gp in 1..=3u32 {
        let p = &enumerate_pairs(2 * gp, 1)[0];
        let v = p.graph().markings[0];
        let want = &(&sgn(gp) * &one_minus_z2) * &i1(gp, &c(int(2)), &lin(1, -1), &lin(1, 1)).unwrap();
        assert_eq!(vertex_contribution(p, v, &w).unwrap(), want);
    }
}

#[test]
fn degree_one_matches_one_partition_integral() {
    let w = Weights::generic();
    for g in [0u32, 2, 4, 6] {
        let total = gw_real_sum(g, 1, &w).unwrap();
        let want = &sgn(g / 2) * &i1(g / 2, &c(int(2)), &lin(1, -1), &lin(1, 1)).unwrap();
        assert_eq!(total, want);
    }
}

#[test]
fn degree_three_vertex_example() {
    let w = Weights::generic();
    for g in [0u32, 2] {
        for p in enumerate_pairs(g, 3) {
            let (d, g1, _) = classify(&p);
            if d != (Diagram::FixedAtOne { same: true }) {
                continue;
            }
            let v1 = p.graph().markings[0];
            let pref = &(&c(int(-2)) * &(&c(int(1)) - &(&z() * &z()))) * &lin(1, 1);
            let want = &(&sgn(g1) * &pref) * &i2(g1, &lin(1, -1), &c(int(2)), &lin(1, 1)).unwrap();
            assert_eq!(vertex_contribution(&p, v1, &w).unwrap(), want);
        }
    }
}

#[test]
fn degree_three_diagrams() {
    let w = Weights::generic();
    let two = c(int(2));
    for g in [0u32, 2, 4] {
        let s = sgn(g / 2);
        for p in enumerate_pairs(g, 3) {
            let (d, g1, g2) = classify(&p);
            let want = match d {
                Diagram::FixedAtOne { same: true } => {
                    &i2(g1, &lin(1, -1), &two, &lin(1, 1)).unwrap() * &i1(g2, &lin(-1, 1), &lin(0, 2), &lin(1, 1)).unwrap()
                }
                Diagram::FixedAtOne { same: false } => {
                    &i2(g1, &lin(1, 1), &two, &lin(1, -1)).unwrap() * &i1(g2, &lin(1, 1), &lin(0, 2), &lin(-1, 1)).unwrap()
                }
                Diagram::FixedAtThree { same: true } => {
                    let f = two.checked_div(&lin(-1, 3)).unwrap();
                    &f * &(&i1(g1, &lin(1, -1), &two, &lin(1, 1)).unwrap() * &i2(g2, &lin(-1, 1), &lin(0, 2), &lin(1, 1)).unwrap())
                }
                Diagram::FixedAtThree { same: false } => {
                    let f = c(int(-2)).checked_div(&lin(1, 3)).unwrap();
                    &f * &(&i1(g1, &lin(1, 1), &two, &lin(1, -1)).unwrap() * &i2(g2, &lin(1, 1), &lin(0, 2), &lin(-1, 1)).unwrap())
                }
                other => panic!("unexpected degree 3 class {other:?}"),
            };
            assert_eq!(pair_contribution(&p, &w).unwrap(), &s * &want, "genus {g}, {d:?}, ({g1}, {g2})");
        }
    }
}

#[test]
fn degree_four_diagrams() {
    let w = Weights::generic();
    let two = c(int(2));
    for g in [1u32, 3] {
        let s = sgn((g - 1) / 2);
        let mut loops = RationalFunction::zero();
        for p in enumerate_pairs(g, 4) {
            let (d, g1, g2) = classify(&p);
            let got = pair_contribution(&p, &w).unwrap();
            let want = match d {
                Diagram::TwoFixed { same: true } => -&(&i2(g1, &lin(1, -1), &two, &lin(1, 1)).unwrap()
                    * &i2(g2, &lin(-1, 1), &lin(0, 2), &lin(1, 1)).unwrap()),
                Diagram::TwoFixed { same: false } => -&(&i2(g1, &lin(1, 1), &two, &lin(1, -1)).unwrap()
                    * &i2(g2, &lin(1, 1), &lin(0, 2), &lin(-1, 1)).unwrap()),
                Diagram::Square => {
                    &i2(g1, &lin(1, -1), &lin(1, 1), &two).unwrap() * &i2(g2, &lin(-1, 1), &lin(1, 1), &lin(0, 2)).unwrap()
                }
                Diagram::Loop => {
                    loops = &loops + &got;
                    continue;
                }
                other => panic!("unexpected degree 4 class {other:?}"),
            };
            assert_eq!(got, &s * &want, "genus {g}, {d:?}");
        }
        assert!(loops.is_zero(), "loop classes sum to {loops}");
    }
}

#[test]
fn half_choices_do_not_matter() {
    let w = Weights::generic();
    for (g, d) in [(0, 1), (2, 1), (0, 3), (2, 3), (1, 4), (3, 4)] {
        for p in enumerate_pairs(g, d) {
            let base = pair_contribution(&p, &w).unwrap();
            for (vs, es) in p.half_choices() {
                let q = p.with_halves(vs.clone(), es.clone()).unwrap();
                assert_eq!(pair_contribution(&q, &w).unwrap(), base, "g={g} d={d} V+={vs:?} E+={es:?}");
            }
        }
    }
}

#[test]
fn invalid_halves_rejected() {
    let p = &enumerate_pairs(1, 4)[0];
    assert!(p.with_halves(vec![0, 1], p.plus_edges().to_vec()).is_err());
    assert!(p.with_halves(p.plus_vertices().to_vec(), vec![]).is_err() || p.plus_edges().is_empty());
}

#[test]
fn parity_vanishing() {
    for (g, d) in [(1, 1), (0, 2), (1, 3), (0, 4), (2, 4)] {
        assert!(gw_real_sum(g, d, &Weights::generic()).unwrap().is_zero());
        assert_eq!(gw_real(g, d).unwrap(), int(0));
    }
}

#[test]
fn weight_specializations_agree() {
    for (g, d) in [(0, 1), (2, 1), (0, 3), (2, 3), (1, 4)] {
        let a = gw_real_sum(g, d, &Weights::at(rat(2, 5))).unwrap();
        let b = gw_real_sum(g, d, &Weights::at(rat(7, 3))).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.as_constant().unwrap(), gw_real(g, d).unwrap());
    }
}

fn shuffle(n: usize, seed: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    for (i, s) in seed.iter().enumerate().take(n) {
        let j = i + s % (n - i);
        v.swap(i, j);
    }
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn relabeling_preserves_class(seed in proptest::collection::vec(0usize..100, 16)) {
        for (g, d) in [(0, 3), (1, 4), (3, 4)] {
            let pairs = enumerate_pairs(g, d);
            let mut auts: Vec<u64> = pairs.iter().map(|p| p.automorphisms()).collect();
            let mut relabeled = Vec::new();
            for p in &pairs {
                let vp = shuffle(p.graph().vertex_count(), &seed);
                let ep = shuffle(p.graph().edges.len(), &seed[8..]);
                let q = p.relabeled(&vp, &ep).unwrap();
                prop_assert_eq!(q.key(), p.key());
                relabeled.push(q.automorphisms());
            }
            auts.sort();
            relabeled.sort();
            prop_assert_eq!(auts, relabeled);
        }
    }
}
