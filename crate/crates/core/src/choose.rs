//! Universally quantified deciders: a graph is (equitably, proportionally)
//! k-choosable when every k-assignment admits a qualifying coloring.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::assign::{Color, Enumerator, ListAssignment, Prefix, Strategy};
use crate::graph::Graph;
use crate::solver::{self, Coloring, Mode, SearchStats, SolverConfig};

/// Which choosability notion to decide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChoiceMode {
    List,
    EquitableList,
    Proportional,
}

impl ChoiceMode {
    pub fn coloring_mode(self) -> Mode {
        match self {
            ChoiceMode::List => Mode::Proper,
            ChoiceMode::EquitableList => Mode::Equitable,
            ChoiceMode::Proportional => Mode::Proportional,
        }
    }

    pub fn claim_kind(self) -> ClaimKind {
        match self {
            ChoiceMode::List => ClaimKind::NotChoosable,
            ChoiceMode::EquitableList => ClaimKind::NotEquitChoosable,
            ChoiceMode::Proportional => ClaimKind::NotPropChoosable,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Choosable,
    NotChoosable,
    Unknown,
}

/// Checks run on every proportional coloring the decider finds.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditTally {
    pub colorings: u64,
    /// Coloring failed its own validity predicate.
    pub unsound: u64,
    /// Almost-excessive count ≠ (1/k)·Σ residues.
    pub identity_violations: u64,
    /// k = 2 only: odd colors not split half and half.
    pub parity_violations: u64,
}

impl AuditTally {
    pub fn merge(&mut self, other: &AuditTally) {
        self.colorings += other.colorings;
        self.unsound += other.unsound;
        self.identity_violations += other.identity_violations;
        self.parity_violations += other.parity_violations;
    }

    pub fn is_clean(&self) -> bool {
        self.unsound == 0 && self.identity_violations == 0 && self.parity_violations == 0
    }

    fn record(&mut self, g: &Graph, l: &ListAssignment, f: &Coloring, mode: Mode) {
        self.colorings += 1;
        if !solver::is_valid(g, l, f, mode) {
            self.unsound += 1;
        }
        if mode == Mode::Proportional {
            if solver::count_almost_excessive(l, f).is_err() {
                self.identity_violations += 1;
            }
            if l.k() == 2 && !solver::half_odd_colors_excessive(l, f) {
                self.parity_violations += 1;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    /// Present iff `status` is `NotChoosable`: the first failing assignment
    /// in enumeration order.
    pub witness: Option<ListAssignment>,
    pub assignments_checked: u64,
    pub exhausted: bool,
    pub solver_nodes: u64,
    pub audit: AuditTally,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecideOptions {
    /// Maximum number of assignments to scan.
    pub budget: Option<u64>,
    pub strategy: Strategy,
    pub pruning: bool,
    pub threads: usize,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions { budget: None, strategy: Strategy::CanonicalFilter, pruning: true, threads: 1 }
    }
}

impl DecideOptions {
    pub fn with_threads(self, threads: usize) -> Self {
        DecideOptions { threads, ..self }
    }

    pub fn with_budget(self, budget: Option<u64>) -> Self {
        DecideOptions { budget, ..self }
    }
}

#[derive(Debug, Default)]
struct ScanOutcome {
    checked: u64,
    nodes: u64,
    audit: AuditTally,
    failure: Option<ListAssignment>,
    exhausted: bool,
}

fn scan(
    g: &Graph,
    enumerator: &Enumerator,
    prefix: &Prefix,
    mode: Mode,
    options: &DecideOptions,
    abort: impl Fn() -> bool,
) -> ScanOutcome {
    let k = enumerator.k();
    let config = SolverConfig { pruning: options.pruning };
    let mut stream = enumerator.stream_from(prefix).with_budget(options.budget);
    let mut out = ScanOutcome::default();
    let mut stats = SearchStats::default();
    while let Some(lists) = stream.next_lists() {
        out.checked += 1;
        match solver::search(g, k, lists, mode, config, &mut stats) {
            Some(f) => {
                let l = ListAssignment::new(k, lists.to_vec()).expect("enumerated lists are well formed");
                out.audit.record(g, &l, &f, mode);
            }
            None => {
                out.failure = Some(ListAssignment::new(k, lists.to_vec()).expect("enumerated lists are well formed"));
                break;
            }
        }
        if out.checked % 4096 == 0 && abort() {
            break;
        }
    }
    out.nodes = stats.nodes;
    out.exhausted = stream.exhausted();
    out
}

/// Scans the k-assignments of `g` for one without a qualifying coloring.
///
/// With more than one thread the stream is split by canonical prefix. The
/// witness and all counters are those of the sequential scan up to the
/// witness, so results do not depend on the thread count. A budget forces a
/// sequential scan.
pub fn decide(g: &Graph, k: usize, mode: ChoiceMode, options: &DecideOptions) -> Verdict {
    assert!(k >= 1, "k must be positive");
    let started = Instant::now();
    let enumerator = Enumerator::new(g.vertex_count(), k, options.strategy);
    let coloring_mode = mode.coloring_mode();

    let outcome = if options.threads <= 1 || options.budget.is_some() || g.vertex_count() < 3 {
        scan(g, &enumerator, &enumerator.root(), coloring_mode, options, || false)
    } else {
        scan_parallel(g, &enumerator, coloring_mode, options)
    };

    let status = match (&outcome.failure, outcome.exhausted) {
        (Some(_), _) => Status::NotChoosable,
        (None, true) => Status::Choosable,
        (None, false) => Status::Unknown,
    };
    Verdict {
        status,
        witness: outcome.failure,
        assignments_checked: outcome.checked,
        exhausted: outcome.exhausted,
        solver_nodes: outcome.nodes,
        audit: outcome.audit,
        elapsed: started.elapsed(),
    }
}

fn scan_parallel(g: &Graph, enumerator: &Enumerator, mode: Mode, options: &DecideOptions) -> ScanOutcome {
    let depth = split_depth(enumerator, options.threads);
    let prefixes = enumerator.prefixes(depth);
    let results: Vec<Mutex<Option<ScanOutcome>>> = prefixes.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let first_failure = AtomicUsize::new(usize::MAX);

    std::thread::scope(|s| {
        for _ in 0..options.threads {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= prefixes.len() {
                    break;
                }
                if i > first_failure.load(Ordering::Relaxed) {
                    continue;
                }
                let out = scan(g, enumerator, &prefixes[i], mode, options, || i > first_failure.load(Ordering::Relaxed));
                if out.failure.is_some() {
                    first_failure.fetch_min(i, Ordering::Relaxed);
                }
                *results[i].lock().unwrap() = Some(out);
            });
        }
    });

    // Every prefix before the first failing one was scanned to completion.
    let stop = first_failure.into_inner();
    let mut total = ScanOutcome { exhausted: true, ..Default::default() };
    for (i, slot) in results.into_iter().enumerate() {
        if i > stop {
            break;
        }
        let part = slot.into_inner().unwrap().expect("prefix before the first failure was scanned");
        total.checked += part.checked;
        total.nodes += part.nodes;
        total.audit.merge(&part.audit);
        if part.failure.is_some() {
            total.failure = part.failure;
        }
    }
    total
}

/// Deepest prefix level that still yields only a modest number of work
/// units, so workers stay busy without flooding memory.
fn split_depth(enumerator: &Enumerator, threads: usize) -> usize {
    let target = 64 * threads;
    let mut depth = 1;
    while depth < enumerator.vertex_count().saturating_sub(1) {
        if enumerator.prefixes(depth + 1).len() > target * 8 || enumerator.prefixes(depth).len() >= target {
            break;
        }
        depth += 1;
    }
    depth
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundReason {
    /// χ_pc > (Δ + 1)/2.
    DegreeBound,
    /// A failing assignment was found at the previous k.
    Witness,
    /// Decider exhausted every assignment at this k.
    DeciderSuccess,
    /// χ_pc ≤ |V| − 1 for non-complete graphs.
    OrderMinusOne,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub value: usize,
    pub reason: BoundReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KVerdict {
    pub k: usize,
    pub status: Status,
    pub assignments_checked: u64,
    pub witness: Option<ListAssignment>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiPcReport {
    pub graph: String,
    pub vertex_count: usize,
    pub max_degree: usize,
    pub k_max: usize,
    pub lower_bound: Bound,
    pub upper_bound: Option<Bound>,
    pub exact: Option<usize>,
    pub per_k: Vec<KVerdict>,
    pub audit: AuditTally,
}

impl ChiPcReport {
    /// True when the scan stopped at `k_max` without settling the value.
    pub fn unknown_above_cap(&self) -> bool {
        self.exact.is_none()
    }
}

/// Smallest k with χ_pc(G) > (Δ + 1)/2, i.e. ⌊(Δ + 1)/2⌋ + 1.
pub fn degree_lower_bound(g: &Graph) -> usize {
    g.max_degree().div_ceil(2) + 1
}

/// Proportional choice number by scanning k = 1, 2, … up to `k_max`.
/// Monotonicity in k makes the first choosable k exact when every smaller
/// k was refuted. Default cap: |V| − 1, or |V| for complete graphs.
pub fn chi_pc(g: &Graph, name: &str, k_max: Option<usize>, options: &DecideOptions) -> ChiPcReport {
    let n = g.vertex_count();
    let complete = g.is_complete();
    let default_cap = if complete { n } else { n.saturating_sub(1) };
    let k_max = k_max.unwrap_or(default_cap).max(1);

    let mut lower = Bound { value: degree_lower_bound(g), reason: BoundReason::DegreeBound };
    let mut upper = (!complete && n >= 2).then_some(Bound { value: n - 1, reason: BoundReason::OrderMinusOne });
    let mut exact = None;
    let mut per_k = Vec::new();
    let mut all_refuted = true;
    let mut audit = AuditTally::default();
    for k in 1..=k_max {
        let v = decide(g, k, ChoiceMode::Proportional, options);
        audit.merge(&v.audit);
        per_k.push(KVerdict { k, status: v.status, assignments_checked: v.assignments_checked, witness: v.witness });
        match v.status {
            Status::NotChoosable => {
                if k + 1 > lower.value {
                    lower = Bound { value: k + 1, reason: BoundReason::Witness };
                }
            }
            Status::Choosable => {
                if upper.as_ref().is_none_or(|u| k <= u.value) {
                    upper = Some(Bound { value: k, reason: BoundReason::DeciderSuccess });
                }
                if all_refuted || k == lower.value {
                    exact = Some(k);
                }
                break;
            }
            Status::Unknown => all_refuted = false,
        }
    }
    if let (Some(u), None) = (&upper, exact) {
        if u.value == lower.value {
            exact = Some(u.value);
        }
    }
    ChiPcReport {
        graph: name.to_string(),
        vertex_count: n,
        max_degree: g.max_degree(),
        k_max,
        lower_bound: lower,
        upper_bound: upper,
        exact,
        per_k,
        audit,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    NotPropChoosable,
    NotEquitChoosable,
    NotChoosable,
}

impl ClaimKind {
    pub fn coloring_mode(self) -> Mode {
        match self {
            ClaimKind::NotPropChoosable => Mode::Proportional,
            ClaimKind::NotEquitChoosable => Mode::Equitable,
            ClaimKind::NotChoosable => Mode::Proper,
        }
    }
}

pub const CERTIFICATE_SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateGraph {
    pub vertex_count: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateMetadata {
    pub tool_version: String,
    pub enumeration_order: String,
}

/// A self-contained refutation: a graph, k, and an assignment admitting no
/// coloring of the claimed kind. Fields are stored raw so malformed
/// certificates can be represented and rejected by [`verify_certificate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: String,
    pub claim: ClaimKind,
    pub graph: CertificateGraph,
    pub k: usize,
    pub witness: Vec<Vec<Color>>,
    pub metadata: CertificateMetadata,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("verdict is {0:?}; only refutations have certificates")]
    NotRefuted(Status),
}

pub fn make_certificate(
    verdict: &Verdict,
    g: &Graph,
    k: usize,
    mode: ChoiceMode,
) -> Result<Certificate, CertificateError> {
    match (&verdict.status, &verdict.witness) {
        (Status::NotChoosable, Some(w)) => Ok(certificate_for(g, k, mode, w, Strategy::CanonicalFilter)),
        (status, _) => Err(CertificateError::NotRefuted(*status)),
    }
}

/// Packages an explicit witness, without checking it.
pub fn certificate_for(g: &Graph, k: usize, mode: ChoiceMode, witness: &ListAssignment, order: Strategy) -> Certificate {
    let raw = g.to_raw();
    Certificate {
        schema_version: CERTIFICATE_SCHEMA_VERSION.to_string(),
        claim: mode.claim_kind(),
        graph: CertificateGraph { vertex_count: raw.vertex_count, edges: raw.edges },
        k,
        witness: witness.lists().to_vec(),
        metadata: CertificateMetadata {
            tool_version: crate::VERSION.to_string(),
            enumeration_order: order.tag().to_string(),
        },
    }
}

/// Re-checks a certificate using only graph validation and the coloring
/// search. False on any malformed field or if the witness is colorable.
pub fn verify_certificate(cert: &Certificate) -> bool {
    if cert.schema_version != CERTIFICATE_SCHEMA_VERSION || cert.k == 0 {
        return false;
    }
    let Ok(g) = Graph::from_edges(cert.graph.vertex_count, cert.graph.edges.iter().map(|e| (e[0], e[1]))) else {
        return false;
    };
    if cert.witness.len() != g.vertex_count() {
        return false;
    }
    let Ok(l) = ListAssignment::new(cert.k, cert.witness.clone()) else {
        return false;
    };
    solver::find_coloring(&g, &l, cert.claim.coloring_mode()).is_none()
}
