//! Reproduces the known results on proportional choosability by direct
//! computation and collects the outcome in a [`SuiteReport`].
//!
//! A claim is `verified` when the computation agrees, `refuted` when it
//! disagrees, and `skipped-budget` when a decider ran out of budget before
//! settling it. Refutations are build-breaking: every claim here is an
//! established result.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::assign::{Color, ListAssignment, Strategy};
use crate::choose::{
    certificate_for, chi_pc, decide, verify_certificate, AuditTally, Certificate, ChoiceMode, DecideOptions,
    Status, Verdict,
};
use crate::graph::{self, Graph};
use crate::io::forest_name;
use crate::solver::{self, Mode};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Largest total order in the linear-forest sweep.
    pub n_max: usize,
    /// Star K_{1,2k−1} checks, one per k.
    pub star_ks: Vec<usize>,
    /// k disjoint copies of K_{1,k}, one per k.
    pub disjoint_star_ks: Vec<usize>,
    pub kmm_ms: Vec<usize>,
    pub order_minus_one_n_max: usize,
    pub wang_lih_ks: Vec<usize>,
    /// Largest total order for the equitable-implication corpus.
    pub implication_n_max: usize,
    #[serde(skip)]
    pub budget: Option<u64>,
    #[serde(skip)]
    pub threads: usize,
    /// Record wall-clock time per claim. Off by default so reports are
    /// byte-for-byte reproducible.
    #[serde(skip)]
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_max: 7,
            star_ks: vec![2, 3],
            disjoint_star_ks: vec![2],
            kmm_ms: vec![1, 2],
            order_minus_one_n_max: 4,
            wang_lih_ks: vec![3, 4],
            implication_n_max: 6,
            budget: None,
            threads: 1,
            timings: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Verified,
    Refuted,
    SkippedBudget,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Evidence {
    Decision {
        graph: String,
        k: usize,
        mode: ChoiceMode,
        status: Status,
        assignments_checked: u64,
        solver_nodes: u64,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        certificate: Option<Certificate>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        certificate_verified: Option<bool>,
    },
    ChiPc {
        graph: String,
        max_degree: usize,
        lower_bound: usize,
        upper_bound: Option<usize>,
        exact: Option<usize>,
    },
    Fact {
        text: String,
        holds: bool,
    },
}

impl Evidence {
    fn holds(&self) -> bool {
        match self {
            Evidence::Fact { holds, .. } => *holds,
            Evidence::Decision { certificate_verified, .. } => certificate_verified.unwrap_or(true),
            Evidence::ChiPc { .. } => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub id: String,
    pub statement: String,
    pub params: BTreeMap<String, String>,
    pub status: ClaimStatus,
    pub evidence: Vec<Evidence>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteTotals {
    pub verified: usize,
    pub refuted: usize,
    pub skipped_budget: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub claims: Vec<ClaimRecord>,
    /// Computed values that no stated result covers.
    pub observations: Vec<ClaimRecord>,
    /// Checks on every proportional coloring found while deciding.
    pub audit: AuditTally,
    pub totals: SuiteTotals,
}

impl SuiteReport {
    pub fn claim(&self, id: &str) -> Option<&ClaimRecord> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn all_verified(&self) -> bool {
        self.totals.refuted == 0 && self.totals.skipped_budget == 0
    }

    /// Every certificate attached to any claim.
    pub fn certificates(&self) -> impl Iterator<Item = &Certificate> {
        self.claims.iter().flat_map(|c| &c.evidence).filter_map(|e| match e {
            Evidence::Decision { certificate: Some(c), .. } => Some(c),
            _ => None,
        })
    }
}

/// All partitions of `n` into positive parts, parts descending, in reverse
/// lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            acc.push(part);
            rec(n - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every graph on `n` vertices, one per isomorphism class. Brute force over
/// all labelings; fine up to n = 6 or so.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = all_permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let key = perms
            .iter()
            .map(|p| {
                let mut relabeled: Vec<(usize, usize)> =
                    edges.iter().map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v]))).collect();
                relabeled.sort_unstable();
                relabeled
            })
            .min()
            .unwrap_or_default();
        if seen.insert(key) {
            out.push(Graph::from_edges(n, edges).unwrap());
        }
    }
    out
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// The 2-assignment on the Wang–Lih tree: {1,2} on v and its leaves, {1,3}
/// on u, {2,3} on u's leaves, {2,3} on w, {1,3} on w's leaves.
pub fn wang_lih_assignment(t: &graph::WangLihTree) -> ListAssignment {
    let mut lists: Vec<Vec<Color>> = vec![Vec::new(); t.graph.vertex_count()];
    lists[t.v] = vec![1, 2];
    lists[t.u] = vec![1, 3];
    lists[t.w] = vec![2, 3];
    for &x in &t.leaves_v {
        lists[x] = vec![1, 2];
    }
    for &x in &t.leaves_u {
        lists[x] = vec![2, 3];
    }
    for &x in &t.leaves_w {
        lists[x] = vec![1, 3];
    }
    ListAssignment::new(2, lists).expect("fixed lists are well formed")
}

struct Runner<'a> {
    config: &'a SuiteConfig,
    options: DecideOptions,
    audit: AuditTally,
    /// Proportional k = 2 verdicts on linear forests, keyed by sorted orders.
    forests: BTreeMap<Vec<usize>, Verdict>,
    claims: Vec<ClaimRecord>,
    observations: Vec<ClaimRecord>,
}

impl Runner<'_> {
    fn decide(&mut self, g: &Graph, k: usize, mode: ChoiceMode) -> Verdict {
        let v = decide(g, k, mode, &self.options);
        self.audit.merge(&v.audit);
        v
    }

    fn forest(&mut self, orders: &[usize]) -> Verdict {
        let mut key = orders.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(v) = self.forests.get(&key) {
            return v.clone();
        }
        let v = self.decide(&graph::linear_forest(&key), 2, ChoiceMode::Proportional);
        self.forests.insert(key, v.clone());
        v
    }

    fn push(&mut self, mut record: ClaimRecord, started: Instant) {
        if self.config.timings {
            record.elapsed_ms = Some(started.elapsed().as_millis() as u64);
        }
        self.claims.push(record);
    }
}

fn evidence(name: &str, g: &Graph, k: usize, mode: ChoiceMode, v: &Verdict) -> Evidence {
    let certificate = v.witness.as_ref().map(|w| certificate_for(g, k, mode, w, Strategy::CanonicalFilter));
    let certificate_verified = certificate.as_ref().map(verify_certificate);
    Evidence::Decision {
        graph: name.to_string(),
        k,
        mode,
        status: v.status,
        assignments_checked: v.assignments_checked,
        solver_nodes: v.solver_nodes,
        certificate,
        certificate_verified,
    }
}

/// Status of a claim that `statuses` should all equal `expected`, with
/// supporting facts in `evidence`.
fn judge(expected: &[(Status, Status)], evidence: &[Evidence]) -> ClaimStatus {
    if expected.iter().any(|&(got, want)| got != want && got != Status::Unknown) || evidence.iter().any(|e| !e.holds())
    {
        ClaimStatus::Refuted
    } else if expected.iter().any(|&(got, _)| got == Status::Unknown) {
        ClaimStatus::SkippedBudget
    } else {
        ClaimStatus::Verified
    }
}

fn record(id: String, statement: &str, params: &[(&str, String)], status: ClaimStatus, evidence: Vec<Evidence>) -> ClaimRecord {
    ClaimRecord {
        id,
        statement: statement.to_string(),
        params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        status,
        evidence,
        elapsed_ms: None,
    }
}

fn fact(text: impl Into<String>, holds: bool) -> Evidence {
    Evidence::Fact { text: text.into(), holds }
}

pub fn run_suite(config: &SuiteConfig) -> SuiteReport {
    let options = DecideOptions { budget: config.budget, threads: config.threads.max(1), ..DecideOptions::default() };
    let mut r = Runner {
        config,
        options,
        audit: AuditTally::default(),
        forests: BTreeMap::new(),
        claims: Vec::new(),
        observations: Vec::new(),
    };
    check_linear_forests(&mut r);
    check_obstructions(&mut r);
    check_subgraph_monotonicity(&mut r);
    check_chi_pc(&mut r);
    for &k in &config.star_ks {
        check_star(&mut r, k);
    }
    for &k in &config.disjoint_star_ks {
        check_disjoint_stars(&mut r, k);
    }
    for &m in &config.kmm_ms {
        check_kmm(&mut r, m);
    }
    check_order_minus_one(&mut r);
    for &k in &config.wang_lih_ks {
        check_wang_lih(&mut r, k);
    }
    check_equitable_implications(&mut r);

    let mut totals = SuiteTotals::default();
    for c in &r.claims {
        match c.status {
            ClaimStatus::Verified => totals.verified += 1,
            ClaimStatus::Refuted => totals.refuted += 1,
            ClaimStatus::SkippedBudget => totals.skipped_budget += 1,
        }
    }
    SuiteReport { config: config.clone(), claims: r.claims, observations: r.observations, audit: r.audit, totals }
}

/// Positive side and consistency of the linear-forest characterization.
fn check_linear_forests(r: &mut Runner) {
    let started = Instant::now();
    let mut consistency = Vec::new();
    let mut statuses = Vec::new();
    for n in 1..=r.config.n_max {
        for orders in partitions(n) {
            let part_started = Instant::now();
            let g = graph::linear_forest(&orders);
            let name = forest_name(&orders);
            let v = r.forest(&orders);
            let fits = graph::orders_fit_proportional_2_profile(&orders);
            let expected = if fits { Status::Choosable } else { Status::NotChoosable };
            let ev = evidence(&name, &g, 2, ChoiceMode::Proportional, &v);
            statuses.push((v.status, expected));
            if fits {
                let status = judge(&[(v.status, expected)], std::slice::from_ref(&ev));
                let rec = record(
                    format!("linear-forest/positive/{name}"),
                    "a linear forest with largest component at most 5 and all others at most 2 is proportionally 2-choosable",
                    &[("graph", name.clone()), ("k", "2".into())],
                    status,
                    vec![ev.clone()],
                );
                r.push(rec, part_started);
            }
            consistency.push(ev);
        }
    }
    let status = judge(&statuses, &consistency);
    let rec = record(
        "linear-forest/consistency".into(),
        "on linear forests, proportional 2-choosability holds exactly for the small-component profile",
        &[("n_max", r.config.n_max.to_string()), ("k", "2".into())],
        status,
        consistency,
    );
    r.push(rec, started);
}

fn check_obstructions(r: &mut Runner) {
    let obstructions: Vec<(&str, Graph)> = vec![
        ("K3", graph::complete(3)),
        ("K1,3", graph::star(3)),
        ("C4", graph::cycle(4).unwrap()),
        ("P6", graph::path(6)),
        ("P3+P3", graph::linear_forest(&[3, 3])),
    ];
    for (name, g) in obstructions {
        let started = Instant::now();
        let v = r.decide(&g, 2, ChoiceMode::Proportional);
        let ev = evidence(name, &g, 2, ChoiceMode::Proportional, &v);
        let status = judge(&[(v.status, Status::NotChoosable)], std::slice::from_ref(&ev));
        let rec = record(
            format!("linear-forest/obstruction/{name}"),
            "excluded graph is not proportionally 2-choosable",
            &[("graph", name.into()), ("k", "2".into())],
            status,
            vec![ev],
        );
        r.push(rec, started);
    }
}

/// Subgraph monotonicity on every vertex- and edge-deletion among the swept
/// linear forests: G choosable ⇒ G − x choosable. Uses cached verdicts only.
fn check_subgraph_monotonicity(r: &mut Runner) {
    let started = Instant::now();
    let mut pairs = 0usize;
    let mut violations = Vec::new();
    let mut undecided = 0usize;
    let keys: Vec<Vec<usize>> = r.forests.keys().cloned().collect();
    for orders in keys {
        let parent = r.forests[&orders].status;
        let mut children = BTreeSet::new();
        for (i, &part) in orders.iter().enumerate() {
            // delete a vertex at position j of a path of order `part`,
            // or the edge between positions j and j + 1
            for j in 0..part {
                let mut rest: Vec<usize> = orders.iter().enumerate().filter(|&(x, _)| x != i).map(|(_, &o)| o).collect();
                rest.extend([j, part - 1 - j].into_iter().filter(|&o| o > 0));
                children.insert(rest);
                if j + 1 < part {
                    let mut rest: Vec<usize> =
                        orders.iter().enumerate().filter(|&(x, _)| x != i).map(|(_, &o)| o).collect();
                    rest.extend([j + 1, part - 1 - j]);
                    children.insert(rest);
                }
            }
        }
        for mut child in children {
            child.sort_unstable_by(|a, b| b.cmp(a));
            let Some(v) = r.forests.get(&child) else { continue };
            if child.is_empty() {
                continue;
            }
            pairs += 1;
            match (parent, v.status) {
                (Status::Choosable, Status::NotChoosable) => {
                    violations.push(format!("{} ⊇ {}", forest_name(&orders), forest_name(&child)))
                }
                (Status::Unknown, _) | (_, Status::Unknown) => undecided += 1,
                _ => {}
            }
        }
    }
    let status = if !violations.is_empty() {
        ClaimStatus::Refuted
    } else if undecided > 0 {
        ClaimStatus::SkippedBudget
    } else {
        ClaimStatus::Verified
    };
    let mut ev = vec![fact(format!("{pairs} subgraph pairs checked, {undecided} undecided"), true)];
    ev.extend(violations.into_iter().map(|v| fact(format!("violation: {v}"), false)));
    let rec = record(
        "subgraph-monotonicity/linear-forests".into(),
        "a subgraph of a proportionally k-choosable graph is proportionally k-choosable",
        &[("k", "2".into())],
        status,
        ev,
    );
    r.push(rec, started);
}

fn check_chi_pc(r: &mut Runner) {
    let mut corpus: Vec<(String, Graph, Option<usize>, Option<usize>)> =
        (1..=5).map(|n| (format!("P{n}"), graph::path(n), None, Some(if n == 1 { 1 } else { 2 }))).collect();
    corpus.push(("K1,3".into(), graph::star(3), None, Some(3)));
    corpus.push(("C4".into(), graph::cycle(4).unwrap(), None, Some(3)));
    corpus.push(("P6".into(), graph::path(6), Some(2), None));

    let mut degree_evidence = Vec::new();
    let mut degree_ok = true;
    let mut degree_skipped = false;
    let degree_started = Instant::now();
    for (name, g, cap, expected) in corpus {
        let started = Instant::now();
        let report = chi_pc(&g, &name, cap, &r.options);
        r.audit.merge(&report.audit);
        let ev = Evidence::ChiPc {
            graph: name.clone(),
            max_degree: report.max_degree,
            lower_bound: report.lower_bound.value,
            upper_bound: report.upper_bound.as_ref().map(|b| b.value),
            exact: report.exact,
        };
        // χ_pc > (Δ + 1)/2, compared in integers
        let value = report.exact.unwrap_or(report.lower_bound.value);
        let strict = 2 * value > report.max_degree + 1;
        degree_ok &= strict;
        degree_evidence.push(ev.clone());

        let skipped = report.per_k.iter().any(|kv| kv.status == Status::Unknown);
        degree_skipped |= skipped;
        let (status, statement) = match expected {
            Some(want) => (
                match report.exact {
                    Some(got) if got == want => ClaimStatus::Verified,
                    None if skipped => ClaimStatus::SkippedBudget,
                    _ => ClaimStatus::Refuted,
                },
                format!("proportional choice number equals {want}"),
            ),
            None => (
                if report.lower_bound.value >= 3 {
                    ClaimStatus::Verified
                } else if skipped {
                    ClaimStatus::SkippedBudget
                } else {
                    ClaimStatus::Refuted
                },
                "proportional choice number is at least 3; the exact value is open".to_string(),
            ),
        };
        let mut params = vec![("graph", name.clone())];
        if let Some(c) = cap {
            params.push(("k_max", c.to_string()));
        }
        let rec = record(format!("chi-pc/{name}"), &statement, &params, status, vec![ev]);
        r.push(rec, started);
    }
    let status = if !degree_ok {
        ClaimStatus::Refuted
    } else if degree_skipped {
        ClaimStatus::SkippedBudget
    } else {
        ClaimStatus::Verified
    };
    let rec = record(
        "degree-bound/corpus".into(),
        "proportional choice number exceeds (max degree + 1)/2",
        &[],
        status,
        degree_evidence,
    );
    r.push(rec, degree_started);
}

fn refutation_claim(r: &mut Runner, id: String, statement: &str, name: &str, g: &Graph, k: usize, extra: Vec<Evidence>) {
    let started = Instant::now();
    let v = r.decide(g, k, ChoiceMode::Proportional);
    let mut ev = vec![evidence(name, g, k, ChoiceMode::Proportional, &v)];
    ev.extend(extra);
    let status = judge(&[(v.status, Status::NotChoosable)], &ev);
    let rec = record(id, statement, &[("graph", name.to_string()), ("k", k.to_string())], status, ev);
    r.push(rec, started);
}

fn check_star(r: &mut Runner, k: usize) {
    let leaves = 2 * k - 1;
    let name = format!("K1,{leaves}");
    refutation_claim(
        r,
        format!("star/k={k}"),
        "the star K_{1,2k-1} is not proportionally k-choosable",
        &name,
        &graph::star(leaves),
        k,
        Vec::new(),
    );
}

fn check_disjoint_stars(r: &mut Runner, k: usize) {
    let g = graph::disjoint_stars(k, k);
    let name = vec![format!("K1,{k}"); k].join("+");
    let colorable = solver::find_equitable_k_coloring(&g, k);
    let extra = vec![fact(
        format!("{name} is equitably {k}-colorable"),
        colorable.is_some_and(|f| solver::is_equitable_k_coloring(&g, k, &f)),
    )];
    refutation_claim(
        r,
        format!("disjoint-stars/k={k}"),
        "k disjoint copies of K_{1,k} are not proportionally k-choosable",
        &name,
        &g,
        k,
        extra,
    );
}

fn check_kmm(r: &mut Runner, m: usize) {
    let g = graph::complete_bipartite(m);
    let name = format!("K{m},{m}");
    let mut extra = Vec::new();
    if m == 2 {
        // the 4-cycle witness {1,2},{2,3},{1,2},{2,3}
        let stated = ListAssignment::new(2, vec![vec![1, 2], vec![2, 3], vec![1, 2], vec![2, 3]]).unwrap();
        let cert = certificate_for(&g, 2, ChoiceMode::Proportional, &stated, Strategy::CanonicalFilter);
        extra.push(fact("stated 4-cycle witness {1,2},{2,3},{1,2},{2,3} verifies", verify_certificate(&cert)));
    }
    refutation_claim(
        r,
        format!("kmm/m={m}"),
        "K_{m,m} is not proportionally m-choosable",
        &name,
        &g,
        m,
        extra,
    );
    if m == 2 {
        let started = Instant::now();
        let v = r.decide(&g, 3, ChoiceMode::Proportional);
        let ev = evidence(&name, &g, 3, ChoiceMode::Proportional, &v);
        let mut rec = record(
            "kmm/m=2/k=3".into(),
            "unclaimed: proportional 3-choosability of K_{2,2}, computed for reference",
            &[("graph", name), ("k", "3".into())],
            if v.status == Status::Unknown { ClaimStatus::SkippedBudget } else { ClaimStatus::Verified },
            vec![ev],
        );
        if r.config.timings {
            rec.elapsed_ms = Some(started.elapsed().as_millis() as u64);
        }
        r.observations.push(rec);
    }
}

fn check_order_minus_one(r: &mut Runner) {
    let started = Instant::now();
    let mut statuses = Vec::new();
    let mut ev = Vec::new();
    for n in 2..=r.config.order_minus_one_n_max {
        for g in graphs_up_to_isomorphism(n) {
            if g.is_complete() {
                continue;
            }
            let name = format!("n{n}:{}", crate::io::to_graph6(&g));
            let v = r.decide(&g, n - 1, ChoiceMode::Proportional);
            statuses.push((v.status, Status::Choosable));
            ev.push(evidence(&name, &g, n - 1, ChoiceMode::Proportional, &v));
        }
    }
    let status = judge(&statuses, &ev);
    let rec = record(
        "order-minus-one/all-small-graphs".into(),
        "a non-complete graph on n vertices is proportionally (n-1)-choosable",
        &[("n_max", r.config.order_minus_one_n_max.to_string())],
        status,
        ev,
    );
    r.push(rec, started);
}

fn check_wang_lih(r: &mut Runner, k: usize) {
    let started = Instant::now();
    let t = graph::wang_lih_tree(k).expect("suite only uses k >= 3");
    let l = wang_lih_assignment(&t);
    let (a, b) = t.graph.bipartition().expect("trees are bipartite");
    let no_equitable = solver::find_coloring(&t.graph, &l, Mode::Equitable).is_none();
    let cert = certificate_for(&t.graph, 2, ChoiceMode::EquitableList, &l, Strategy::CanonicalFilter);
    let ev = vec![
        fact("tree is 2-choosable", t.graph.is_2_choosable()),
        fact(format!("bipartition sizes {} and {}", a.len(), b.len()), a.len() == b.len()),
        fact("the fixed 2-assignment admits no equitable coloring", no_equitable),
        fact("equitable non-choosability certificate verifies", verify_certificate(&cert)),
        fact(
            "2-choosable with a balanced bipartition does not imply equitably 2-choosable",
            t.graph.is_2_choosable() && a.len() == b.len() && no_equitable,
        ),
    ];
    let status = judge(&[], &ev);
    let rec = record(
        format!("wang-lih/k={k}"),
        "a balanced 2-choosable tree that is not equitably 2-choosable",
        &[("k", k.to_string()), ("vertices", t.graph.vertex_count().to_string())],
        status,
        ev,
    );
    r.push(rec, started);
}

/// Proportionally k-choosable ⇒ equitably k-choosable and equitably
/// k-colorable, over every linear forest up to the configured order.
fn check_equitable_implications(r: &mut Runner) {
    let started = Instant::now();
    let mut statuses = Vec::new();
    let mut ev = Vec::new();
    for n in 1..=r.config.implication_n_max {
        for orders in partitions(n) {
            let v = r.forest(&orders);
            if v.status != Status::Choosable {
                continue;
            }
            let g = graph::linear_forest(&orders);
            let name = forest_name(&orders);
            let eq = r.decide(&g, 2, ChoiceMode::EquitableList);
            statuses.push((eq.status, Status::Choosable));
            ev.push(evidence(&name, &g, 2, ChoiceMode::EquitableList, &eq));
            let colored = solver::find_equitable_k_coloring(&g, 2).is_some_and(|f| solver::is_equitable_k_coloring(&g, 2, &f));
            ev.push(fact(format!("{name} is equitably 2-colorable"), colored));
        }
    }
    let k13 = graph::star(3);
    let not_colorable = solver::find_equitable_k_coloring(&k13, 2).is_none();
    let prop = r.decide(&k13, 2, ChoiceMode::Proportional);
    ev.push(fact(
        "K1,3 is not equitably 2-colorable and not proportionally 2-choosable",
        not_colorable && prop.status == Status::NotChoosable,
    ));
    let status = judge(&statuses, &ev);
    let rec = record(
        "equitable-implication/linear-forests".into(),
        "proportionally k-choosable implies equitably k-choosable and equitably k-colorable",
        &[("n_max", r.config.implication_n_max.to_string()), ("k", "2".into())],
        status,
        ev,
    );
    r.push(rec, started);
}

/// Human-readable one-line-per-claim summary.
pub fn render_text(report: &SuiteReport) -> String {
    let mut out = String::new();
    for c in &report.claims {
        let tag = match c.status {
            ClaimStatus::Verified => "verified",
            ClaimStatus::Refuted => "REFUTED",
            ClaimStatus::SkippedBudget => "skipped-budget",
        };
        let work: u64 = c
            .evidence
            .iter()
            .map(|e| match e {
                Evidence::Decision { assignments_checked, .. } => *assignments_checked,
                _ => 0,
            })
            .sum();
        out.push_str(&format!("{tag:>14}  {}  ({work} assignments)\n", c.id));
    }
    for c in &report.observations {
        if let Some(Evidence::Decision { status, assignments_checked, .. }) = c.evidence.first() {
            out.push_str(&format!("{:>14}  {}  => {status:?} ({assignments_checked} assignments)\n", "observation", c.id));
        }
    }
    let a = &report.audit;
    out.push_str(&format!(
        "{} verified, {} refuted, {} skipped; {} colorings audited ({} unsound, {} identity, {} parity violations)\n",
        report.totals.verified,
        report.totals.refuted,
        report.totals.skipped_budget,
        a.colorings,
        a.unsound,
        a.identity_violations,
        a.parity_violations
    ));
    out
}
