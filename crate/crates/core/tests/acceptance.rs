//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use prochoose::choose::{self, AuditTally, ChoiceMode, DecideOptions, Status, Verdict};
use prochoose::graph::{self, orders_fit_proportional_2_profile, Graph};
use prochoose::io::{self, forest_name, Report, ReportDocument};
use prochoose::solver::{self, Mode};
use prochoose::suite::{self, partitions, SuiteConfig};
use prochoose::{Color, Enumerator, ListAssignment, Strategy};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// Shared state: verdicts computed once and reused across criteria.
struct Ctx {
    forests: BTreeMap<Vec<usize>, Verdict>,
    audit: AuditTally,
}

impl Ctx {
    fn decide(&mut self, g: &Graph, k: usize, mode: ChoiceMode) -> Verdict {
        let v = choose::decide(g, k, mode, &DecideOptions::default());
        self.audit.merge(&v.audit);
        v
    }

    fn forest(&mut self, orders: &[usize]) -> &Verdict {
        if !self.forests.contains_key(orders) {
            let v = self.decide(&graph::linear_forest(orders), 2, ChoiceMode::Proportional);
            self.forests.insert(orders.to_vec(), v);
        }
        &self.forests[orders]
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn criterion_1(ctx: &mut Ctx) -> Outcome {
    let started = Instant::now();
    let mut up_to_6 = Duration::ZERO;
    let mut bad = Vec::new();
    let mut counts = Vec::new();
    for n in 1..=7 {
        for orders in partitions(n) {
            if !orders_fit_proportional_2_profile(&orders) {
                continue;
            }
            let v = ctx.forest(&orders);
            if v.status != Status::Choosable || !v.exhausted {
                bad.push(forest_name(&orders));
            }
            counts.push(format!("{}:{}", forest_name(&orders), v.assignments_checked));
        }
        if n == 6 {
            up_to_6 = started.elapsed();
        }
    }
    let total = started.elapsed();
    println!("    per-profile assignment counts: {}", counts.join(" "));
    let pass = bad.is_empty() && total <= Duration::from_secs(30 * 60) && up_to_6 <= Duration::from_secs(60);
    outcome(
        pass,
        format!("{} profiles choosable, failures {:?}; n<=6 in {}, n<=7 in {}", counts.len(), bad, secs(up_to_6), secs(total)),
    )
}

fn criterion_2(ctx: &mut Ctx) -> Outcome {
    let started = Instant::now();
    let mut notes = Vec::new();
    let mut pass = true;
    for (name, g) in obstructions() {
        let v = ctx.decide(&g, 2, ChoiceMode::Proportional);
        let ok = match (&v.status, &v.witness) {
            (Status::NotChoosable, Some(w)) => {
                let cert = choose::make_certificate(&v, &g, 2, ChoiceMode::Proportional).expect("refuted verdict");
                // verify after a serialization round trip, as another machine would
                let reloaded = io::certificate_from_json(&io::certificate_to_json(&cert)).expect("round trip");
                choose::verify_certificate(&reloaded) && !common::naive_proportional_exists(&g, w.lists(), 2)
            }
            _ => false,
        };
        pass &= ok;
        notes.push(format!("{name}:{}", if ok { "refuted+cert" } else { "FAIL" }));
    }
    let elapsed = started.elapsed();
    pass &= elapsed <= Duration::from_secs(10);
    outcome(pass, format!("{} in {}", notes.join(" "), secs(elapsed)))
}

fn obstructions() -> Vec<(&'static str, Graph)> {
    vec![
        ("K3", graph::complete(3)),
        ("K1,3", graph::star(3)),
        ("C4", graph::cycle(4).unwrap()),
        ("P6", graph::path(6)),
        ("P3+P3", graph::linear_forest(&[3, 3])),
    ]
}

fn criterion_3(ctx: &mut Ctx) -> Outcome {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for n in 1..=7 {
        for orders in partitions(n) {
            let g = graph::linear_forest(&orders);
            let predicted = orders_fit_proportional_2_profile(&orders) && g.has_proportional_2_profile();
            let v = ctx.forest(&orders);
            let decided = match v.status {
                Status::Choosable => Some(true),
                Status::NotChoosable => Some(false),
                Status::Unknown => None,
            };
            checked += 1;
            if decided != Some(predicted) {
                mismatches.push(forest_name(&orders));
            }
        }
    }
    outcome(mismatches.is_empty(), format!("{checked} linear forests, mismatches {mismatches:?}"))
}

fn criterion_4() -> Outcome {
    let started = Instant::now();
    let mut pass = true;
    let mut notes = Vec::new();
    for k in [3, 4] {
        let t = graph::wang_lih_tree(k).expect("k >= 3");
        let l = suite::wang_lih_assignment(&t);
        let (a, b) = t.graph.bipartition().expect("tree");
        let maps = common::all_maps(l.lists());
        let expected_maps = 1usize << (4 * k + 2);
        let brute_none = !maps.iter().any(|f| common::is_equitable(&t.graph, l.lists(), 2, f));
        let solver_none = solver::find_coloring(&t.graph, &l, Mode::Equitable).is_none();
        let ok = t.graph.is_2_choosable()
            && a.len() == b.len()
            && maps.len() == expected_maps
            && brute_none
            && solver_none;
        pass &= ok;
        notes.push(format!("k={k}: |V|={} maps={} equitable=none:{}", t.graph.vertex_count(), maps.len(), brute_none));
    }
    let elapsed = started.elapsed();
    pass &= elapsed <= Duration::from_secs(5);
    outcome(pass, format!("{} in {}", notes.join("; "), secs(elapsed)))
}

fn criterion_5(ctx: &mut Ctx) -> Outcome {
    let started = Instant::now();
    let cases = [("K1,3", graph::star(3), 2), ("K1,5", graph::star(5), 3), ("K2,2", graph::complete_bipartite(2), 2)];
    let mut pass = true;
    let mut notes = Vec::new();
    for (name, g, k) in cases {
        let v = ctx.decide(&g, k, ChoiceMode::Proportional);
        let ok = v.status == Status::NotChoosable
            && choose::make_certificate(&v, &g, k, ChoiceMode::Proportional).is_ok_and(|c| choose::verify_certificate(&c))
            && v.witness.as_ref().is_some_and(|w| !common::naive_proportional_exists(&g, w.lists(), k));
        pass &= ok;
        notes.push(format!("{name}@k={k}:{}", if ok { "refuted+cert" } else { "FAIL" }));
    }
    let elapsed = started.elapsed();
    pass &= elapsed <= Duration::from_secs(120);
    outcome(pass, format!("{} in {}", notes.join(" "), secs(elapsed)))
}

fn criterion_6(ctx: &mut Ctx) -> Outcome {
    let opts = DecideOptions::default();
    let mut pass = true;
    let mut notes = Vec::new();
    let mut run = |name: String, g: &Graph, k_max: Option<usize>| {
        let r = choose::chi_pc(g, &name, k_max, &opts);
        ctx.audit.merge(&r.audit);
        r
    };
    for n in 1..=5 {
        let r = run(format!("P{n}"), &graph::path(n), None);
        let want = if n == 1 { 1 } else { 2 };
        pass &= r.exact == Some(want);
        notes.push(format!("P{n}={:?}", r.exact));
    }
    let r = run("K1,3".into(), &graph::star(3), None);
    pass &= r.exact == Some(3);
    notes.push(format!("K1,3={:?}", r.exact));
    let r = run("P6".into(), &graph::path(6), Some(2));
    pass &= r.lower_bound.value == 3 && r.exact.is_none();
    notes.push(format!("P6>={}", r.lower_bound.value));
    outcome(pass, notes.join(" "))
}

fn criterion_7(ctx: &mut Ctx) -> Outcome {
    let mut checked = 0;
    let mut counterexamples = Vec::new();
    for n in 1..=6 {
        for orders in partitions(n) {
            if ctx.forest(&orders).status != Status::Choosable {
                continue;
            }
            checked += 1;
            let g = graph::linear_forest(&orders);
            let equitably_choosable = ctx.decide(&g, 2, ChoiceMode::EquitableList).status == Status::Choosable;
            let lists = vec![vec![1, 2]; n];
            let colorable = solver::find_equitable_k_coloring(&g, 2)
                .is_some_and(|f| solver::is_equitable_k_coloring(&g, 2, &f) && common::is_equitable(&g, &lists, 2, f.colors()));
            if !(equitably_choosable && colorable) {
                counterexamples.push(forest_name(&orders));
            }
        }
    }
    outcome(counterexamples.is_empty(), format!("{checked} proportionally 2-choosable forests, counterexamples {counterexamples:?}"))
}

fn criterion_8(ctx: &Ctx) -> Outcome {
    let a = &ctx.audit;
    outcome(
        a.is_clean() && a.colorings > 0,
        format!(
            "{} colorings audited: {} unsound, {} identity, {} parity violations",
            a.colorings, a.unsound, a.identity_violations, a.parity_violations
        ),
    )
}

fn random_assignment(rng: &mut ChaCha8Rng, n: usize) -> ListAssignment {
    let palette_size = rng.gen_range(2..=(2 * n).max(2)) as Color;
    let colors: Vec<Color> = (1..=palette_size).collect();
    let lists = (0..n).map(|_| colors.choose_multiple(rng, 2).copied().collect()).collect();
    ListAssignment::new(2, lists).expect("two distinct colors per list")
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2c01);
    let mut graphs = 0;
    let mut trials = 0;
    let mut disagreements = 0;
    for n in 1..=5 {
        for g in suite::graphs_up_to_isomorphism(n) {
            graphs += 1;
            for _ in 0..200 {
                let l = random_assignment(&mut rng, n);
                trials += 1;
                let found = solver::find_coloring(&g, &l, Mode::Proportional);
                let brute = common::naive_proportional_exists(&g, l.lists(), 2);
                let sound = found.as_ref().is_none_or(|f| {
                    common::is_proportional(&g, l.lists(), 2, f.colors()) && common::identity_holds(l.lists(), 2, f.colors())
                });
                if found.is_some() != brute || !sound {
                    disagreements += 1;
                }
            }
        }
    }
    let mut orbits_ok = true;
    let mut orbit_notes = Vec::new();
    for (n, k) in [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3)] {
        let canonical = common::stream_covers_orbits(Enumerator::new(n, k, Strategy::CanonicalFilter).stream(), n, k, true);
        let growth = common::stream_covers_orbits(Enumerator::new(n, k, Strategy::RestrictedGrowth).stream(), n, k, false);
        orbits_ok &= canonical && growth;
        orbit_notes.push(format!("n={n},k={k}:{}", common::orbit_count(n, k)));
    }
    outcome(
        disagreements == 0 && orbits_ok,
        format!(
            "{graphs} graphs, {trials} assignments, {disagreements} disagreements; orbit coverage {} ({})",
            if orbits_ok { "complete" } else { "INCOMPLETE" },
            orbit_notes.join(" ")
        ),
    )
}

fn criterion_10() -> Outcome {
    let render = |threads: usize| {
        let config = SuiteConfig { threads, ..SuiteConfig::default() };
        let report = suite::run_suite(&config);
        let verified = report.all_verified();
        (ReportDocument::new(Report::Suite(report)).to_json(), verified)
    };
    let started = Instant::now();
    let (one, v1) = render(1);
    let (four, v4) = render(4);
    outcome(
        one == four && v1 && v4,
        format!("{} bytes each, identical: {}, all claims verified: {} ({})", one.len(), one == four, v1 && v4, secs(started.elapsed())),
    )
}

fn main() -> ExitCode {
    let mut ctx = Ctx { forests: BTreeMap::new(), audit: AuditTally::default() };
    let mut results: Vec<(u32, Outcome)> = Vec::new();
    let mut report = |id: u32, o: Outcome| {
        println!("criterion {id:>2} [PRIMARY] {}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        results.push((id, o));
    };
    report(1, criterion_1(&mut ctx));
    report(2, criterion_2(&mut ctx));
    report(3, criterion_3(&mut ctx));
    report(4, criterion_4());
    report(5, criterion_5(&mut ctx));
    report(6, criterion_6(&mut ctx));
    report(7, criterion_7(&mut ctx));
    report(8, criterion_8(&ctx));
    report(9, criterion_9());
    report(10, criterion_10());
    let failed: Vec<u32> = results.iter().filter(|(_, o)| !o.pass).map(|(id, _)| *id).collect();
    println!("acceptance: {} of {} criteria passed", results.len() - failed.len(), results.len());
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
