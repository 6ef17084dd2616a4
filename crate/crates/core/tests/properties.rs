mod common;

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use prochoose::choose::{self, ChoiceMode, DecideOptions, Status};
use prochoose::graph::{self, Graph};
use prochoose::io::{self, Decision, Report, ReportDocument};
use prochoose::solver::{self, Mode};
use prochoose::{Color, Enumerator, ListAssignment, Strategy as Order};

fn assignment_on(n: usize, k: usize) -> impl Strategy<Value = ListAssignment> {
    let palette = (k * n) as Color;
    proptest::collection::vec(proptest::sample::subsequence((1..=palette).collect::<Vec<_>>(), k), n)
        .prop_map(move |lists| ListAssignment::new(k, lists).unwrap())
}

fn arb_assignment(max_n: usize, k: usize) -> impl Strategy<Value = ListAssignment> {
    (1..=max_n).prop_flat_map(move |n| assignment_on(n, k))
}

fn graph_on(n: usize) -> impl Strategy<Value = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    proptest::collection::vec(any::<bool>(), pairs.len())
        .prop_map(move |keep| Graph::from_edges(n, pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&e, _)| e)).unwrap())
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(graph_on)
}

/// A graph and a 2-assignment on the same vertex set.
fn arb_instance(max_n: usize) -> impl Strategy<Value = (Graph, ListAssignment)> {
    (1..=max_n).prop_flat_map(|n| (graph_on(n), assignment_on(n, 2)))
}

fn arb_permutation(palette: Vec<Color>) -> impl Strategy<Value = BTreeMap<Color, Color>> {
    let targets: Vec<Color> = palette.iter().map(|c| c + 100).collect();
    Just(targets).prop_shuffle().prop_map(move |t| palette.iter().copied().zip(t).collect())
}

proptest! {
    #[test]
    fn multiplicities_sum_to_kn(l in arb_assignment(6, 3)) {
        let p = l.multiplicities();
        prop_assert_eq!(p.total(), l.k() * l.vertex_count());
    }

    #[test]
    fn odd_color_count_is_even(l in arb_assignment(7, 2)) {
        prop_assert_eq!(l.multiplicities().odd_colors().len() % 2, 0);
    }

    #[test]
    fn canonical_form_is_idempotent(l in arb_assignment(5, 2)) {
        let c = l.canonical_form();
        prop_assert_eq!(c.canonical_form(), c);
    }

    #[test]
    fn canonical_form_is_relabel_invariant(
        (l, pi) in arb_assignment(4, 2).prop_flat_map(|l| {
            let palette: Vec<Color> = l.palette().into_iter().collect();
            (Just(l), arb_permutation(palette))
        })
    ) {
        let moved = l.relabel(&pi).unwrap();
        prop_assert_eq!(moved.canonical_form(), l.canonical_form());
    }

    #[test]
    fn canonical_form_matches_orbit_oracle((a, b) in (1..=3usize).prop_flat_map(|n| (assignment_on(n, 2), assignment_on(n, 2)))) {
        let same_orbit = common::orbit_key(a.lists()) == common::orbit_key(b.lists());
        prop_assert_eq!(a.canonical_form() == b.canonical_form(), same_orbit);
    }

    #[test]
    fn solvability_is_relabel_invariant(
        g in arb_graph(5),
        seed in any::<u64>(),
    ) {
        let n = g.vertex_count();
        let lists: Vec<Vec<Color>> = (0..n)
            .map(|v| {
                let a = ((seed >> (v * 3)) % (2 * n as u64)) as Color + 1;
                let b = a % (2 * n as Color) + 1;
                vec![a, b]
            })
            .collect();
        let l = ListAssignment::new(2, lists).unwrap();
        let pi: BTreeMap<Color, Color> = l.palette().into_iter().map(|c| (c, 50 - c)).collect();
        let moved = l.relabel(&pi).unwrap();
        for mode in [Mode::Proper, Mode::Equitable, Mode::Proportional] {
            prop_assert_eq!(
                solver::find_coloring(&g, &l, mode).is_some(),
                solver::find_coloring(&g, &moved, mode).is_some()
            );
        }
    }

    #[test]
    fn solver_agrees_with_brute_force((g, l) in arb_instance(5)) {
        let found = solver::find_coloring(&g, &l, Mode::Proportional);
        prop_assert_eq!(found.is_some(), common::naive_proportional_exists(&g, l.lists(), 2));
        if let Some(f) = found {
            prop_assert!(common::is_proportional(&g, l.lists(), 2, f.colors()));
            prop_assert!(common::identity_holds(l.lists(), 2, f.colors()));
        }
        let eq = solver::find_coloring(&g, &l, Mode::Equitable);
        prop_assert_eq!(eq.is_some(), common::naive_equitable_exists(&g, l.lists(), 2));
    }

    #[test]
    fn proportional_implies_equitable((g, l) in arb_instance(6)) {
        if let Some(f) = solver::find_coloring(&g, &l, Mode::Proportional) {
            prop_assert!(solver::is_equitable_l_coloring(&g, &l, &f));
        }
    }

    #[test]
    fn adding_edges_never_helps((g, l) in arb_instance(5)) {
        for &(u, v) in g.edges() {
            let smaller = g.without_edge(u, v);
            if solver::find_coloring(&g, &l, Mode::Proportional).is_some() {
                prop_assert!(solver::find_coloring(&smaller, &l, Mode::Proportional).is_some());
            }
        }
    }

    #[test]
    fn graph_text_round_trip(g in arb_graph(8)) {
        prop_assert_eq!(io::parse_graph(&io::write_graph(&g)).unwrap(), g.clone());
        prop_assert_eq!(io::parse_graph6(&io::to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn linear_forest_verdict_matches_profile(orders in proptest::collection::vec(1usize..=4, 1..=3)) {
        prop_assume!(orders.iter().sum::<usize>() <= 6);
        let g = graph::linear_forest(&orders);
        let v = choose::decide(&g, 2, ChoiceMode::Proportional, &DecideOptions::default());
        prop_assert_eq!(v.status == Status::Choosable, g.has_proportional_2_profile());
    }
}

#[test]
fn orbit_counts_are_frozen() {
    assert_eq!(common::orbit_count(1, 2), 1);
    assert_eq!(common::orbit_count(2, 2), 3);
    assert_eq!(common::orbit_count(3, 2), 16);
    for (n, want) in [(1, 1), (2, 3), (3, 16), (4, 139), (5, 1750)] {
        assert_eq!(Enumerator::new(n, 2, Order::CanonicalFilter).stream().count(), want);
    }
    for (n, want) in [(1, 1), (2, 4), (3, 29), (4, 321), (5, 4900)] {
        assert_eq!(Enumerator::new(n, 2, Order::RestrictedGrowth).stream().count(), want);
    }
}

#[test]
fn streams_cover_every_orbit() {
    for n in 1..=3 {
        assert!(common::stream_covers_orbits(Enumerator::new(n, 2, Order::CanonicalFilter).stream(), n, 2, true));
        assert!(common::stream_covers_orbits(Enumerator::new(n, 2, Order::RestrictedGrowth).stream(), n, 2, false));
    }
}

#[test]
fn canonical_stream_yields_canonical_forms() {
    let all: Vec<_> = Enumerator::new(4, 2, Order::CanonicalFilter).stream().collect();
    let forms: BTreeSet<_> = all.iter().map(|l| l.canonical_form()).collect();
    assert_eq!(forms.len(), all.len());
    assert!(all.iter().all(|l| l.canonical_form() == *l));
}

#[test]
fn verdict_and_certificate_round_trip() {
    let c4 = graph::cycle(4).unwrap();
    for (g, name) in [(c4, "C4"), (graph::path(4), "P4")] {
        let v = choose::decide(&g, 2, ChoiceMode::Proportional, &DecideOptions::default());
        let certificate = choose::make_certificate(&v, &g, 2, ChoiceMode::Proportional).ok();
        if let Some(c) = &certificate {
            let text = io::certificate_to_json(c);
            let back = io::certificate_from_json(&text).unwrap();
            assert_eq!(&back, c);
            assert_eq!(io::certificate_to_json(&back), text);
            assert!(choose::verify_certificate(&back));
        }
        let doc = ReportDocument::new(Report::Decision(Decision {
            graph_name: name.into(),
            graph: g.to_raw(),
            k: 2,
            mode: ChoiceMode::Proportional,
            verdict: v,
            certificate,
        }));
        let text = doc.to_json();
        assert_eq!(ReportDocument::from_json(&text).unwrap(), doc);
    }
}

#[test]
fn chi_pc_report_round_trips() {
    let r = choose::chi_pc(&graph::star(3), "K1,3", None, &DecideOptions::default());
    let doc = ReportDocument::new(Report::ChiPc(r));
    assert_eq!(ReportDocument::from_json(&doc.to_json()).unwrap(), doc);
}

#[test]
fn tampered_certificate_fails() {
    let g = graph::cycle(4).unwrap();
    let v = choose::decide(&g, 2, ChoiceMode::Proportional, &DecideOptions::default());
    let mut cert = choose::make_certificate(&v, &g, 2, ChoiceMode::Proportional).unwrap();
    // a uniform assignment is colorable, so the claim no longer holds
    cert.witness = vec![vec![1, 2]; 4];
    assert!(!choose::verify_certificate(&cert));
}
