//! List assignments and their enumeration up to renaming of colors.
//!
//! Enumeration order is the lexicographic order of the vertex-major flattening
//! (each list sorted ascending). Two strategies walk it:
//!
//! * [`Strategy::RestrictedGrowth`] emits every assignment whose colors are
//!   numbered by first use. Every orbit under color permutations is covered,
//!   some more than once.
//! * [`Strategy::CanonicalFilter`] additionally prunes prefixes that some
//!   relabeling makes lexicographically smaller, leaving exactly the
//!   canonical form of each orbit. Canonicity is prefix-closed, so the
//!   pruning is exact.
//!
//! Since the least member of any orbit is canonical, the first assignment
//! satisfying a relabeling-invariant predicate is the same under both.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssignError {
    #[error("list size k must be at least 1")]
    ZeroK,
    #[error("vertex {vertex}: expected {k} colors, found {found}")]
    WrongListSize { vertex: Vertex, k: usize, found: usize },
    #[error("vertex {vertex}: color {color} repeated")]
    RepeatedColor { vertex: Vertex, color: Color },
    #[error("relabeling does not cover palette color {0}")]
    Unmapped(Color),
    #[error("relabeling sends two palette colors to {0}")]
    NotInjective(Color),
}

/// A k-assignment: every vertex gets a set of exactly `k` distinct colors.
/// Lists are stored sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawAssignment", into = "RawAssignment")]
pub struct ListAssignment {
    k: usize,
    lists: Vec<Vec<Color>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawAssignment {
    pub k: usize,
    pub lists: Vec<Vec<Color>>,
}

impl TryFrom<RawAssignment> for ListAssignment {
    type Error = AssignError;

    fn try_from(raw: RawAssignment) -> Result<Self, Self::Error> {
        ListAssignment::new(raw.k, raw.lists)
    }
}

impl From<ListAssignment> for RawAssignment {
    fn from(l: ListAssignment) -> Self {
        RawAssignment { k: l.k, lists: l.lists }
    }
}

impl ListAssignment {
    pub fn new(k: usize, mut lists: Vec<Vec<Color>>) -> Result<Self, AssignError> {
        if k == 0 {
            return Err(AssignError::ZeroK);
        }
        for (vertex, list) in lists.iter_mut().enumerate() {
            if list.len() != k {
                return Err(AssignError::WrongListSize { vertex, k, found: list.len() });
            }
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(AssignError::RepeatedColor { vertex, color: w[0] });
            }
        }
        Ok(ListAssignment { k, lists })
    }

    /// The same list on each of `n` vertices.
    pub fn uniform(n: usize, list: &[Color]) -> Result<Self, AssignError> {
        ListAssignment::new(list.len(), vec![list.to_vec(); n])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.lists.len()
    }

    pub fn list(&self, v: Vertex) -> &[Color] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    pub fn palette(&self) -> BTreeSet<Color> {
        self.lists.iter().flatten().copied().collect()
    }

    pub fn multiplicities(&self) -> MultiplicityProfile {
        multiplicity_profile(self)
    }

    /// Vertex-major flattening; the comparison key for canonical forms.
    pub fn flatten(&self) -> Vec<Color> {
        self.lists.concat()
    }

    /// Applies `pi` to every list. `pi` must be defined and injective on the
    /// palette; entries for other colors are ignored.
    pub fn relabel(&self, pi: &BTreeMap<Color, Color>) -> Result<Self, AssignError> {
        let mut images = BTreeSet::new();
        for c in self.palette() {
            let img = *pi.get(&c).ok_or(AssignError::Unmapped(c))?;
            if !images.insert(img) {
                return Err(AssignError::NotInjective(img));
            }
        }
        let lists = self.lists.iter().map(|l| l.iter().map(|c| pi[c]).collect()).collect();
        ListAssignment::new(self.k, lists)
    }

    /// Lexicographically least relabeling, comparing vertex-major flattenings
    /// of sorted lists. Equal canonical forms ⇔ relabel-equivalent.
    pub fn canonical_form(&self) -> ListAssignment {
        // Only first-use relabelings can be minimal: at each vertex, colors
        // seen for the first time must take the next unused labels. What
        // remains open is the order among the new colors of one list, so we
        // carry every partial relabeling that still ties for the minimum.
        let mut ties: Vec<BTreeMap<Color, Color>> = vec![BTreeMap::new()];
        let mut out = Vec::with_capacity(self.lists.len());
        let mut next: Color = 1;
        for list in &self.lists {
            let mut best: Option<Vec<Color>> = None;
            let mut survivors = Vec::new();
            for pi in &ties {
                let fresh: Vec<Color> = list.iter().copied().filter(|c| !pi.contains_key(c)).collect();
                let mut image: Vec<Color> = list.iter().filter_map(|c| pi.get(c).copied()).collect();
                image.sort_unstable();
                image.extend(next..next + fresh.len() as Color);
                match best.as_ref().map(|b| image.cmp(b)) {
                    Some(std::cmp::Ordering::Greater) => continue,
                    Some(std::cmp::Ordering::Less) | None => {
                        best = Some(image);
                        survivors.clear();
                    }
                    Some(std::cmp::Ordering::Equal) => {}
                }
                for perm in permutations(fresh.len()) {
                    let mut ext = pi.clone();
                    for (i, &c) in fresh.iter().enumerate() {
                        ext.insert(c, next + perm[i] as Color);
                    }
                    survivors.push(ext);
                }
            }
            let best = best.expect("tie set is never empty");
            next += best.iter().filter(|&&c| c >= next).count() as Color;
            out.push(best);
            survivors.sort();
            survivors.dedup();
            ties = survivors;
        }
        ListAssignment { k: self.k, lists: out }
    }
}

impl fmt::Debug for ListAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ListAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, list) in self.lists.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str("{")?;
            for (j, c) in list.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// η(c) for every palette color, and derived residues.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityProfile {
    pub k: usize,
    pub eta: BTreeMap<Color, usize>,
}

impl MultiplicityProfile {
    pub fn eta(&self, c: Color) -> usize {
        self.eta.get(&c).copied().unwrap_or(0)
    }

    /// η(c) mod k for every palette color.
    pub fn residues(&self) -> BTreeMap<Color, usize> {
        self.eta.iter().map(|(&c, &e)| (c, e % self.k)).collect()
    }

    pub fn odd_colors(&self) -> BTreeSet<Color> {
        self.eta.iter().filter(|(_, &e)| e % 2 == 1).map(|(&c, _)| c).collect()
    }

    /// ⌊η(c)/k⌋
    pub fn lower(&self, c: Color) -> usize {
        self.eta(c) / self.k
    }

    /// ⌈η(c)/k⌉
    pub fn upper(&self, c: Color) -> usize {
        self.eta(c).div_ceil(self.k)
    }

    pub fn total(&self) -> usize {
        self.eta.values().sum()
    }
}

pub fn multiplicity_profile(l: &ListAssignment) -> MultiplicityProfile {
    let mut eta = BTreeMap::new();
    for &c in l.lists.iter().flatten() {
        *eta.entry(c).or_insert(0) += 1;
    }
    MultiplicityProfile { k: l.k, eta }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    RestrictedGrowth,
    #[default]
    CanonicalFilter,
}

impl Strategy {
    pub fn tag(self) -> &'static str {
        match self {
            Strategy::RestrictedGrowth => "restricted-growth",
            Strategy::CanonicalFilter => "canonical-filter",
        }
    }
}

/// Partial relabelings that map the current prefix onto itself. Indexed by
/// color; slot 0 unused.
type TieSet = Vec<Vec<Color>>;

/// A canonical prefix of an assignment, used to split the stream among
/// workers.
#[derive(Debug, Clone)]
pub struct Prefix {
    lists: Vec<Vec<Color>>,
    colors_used: usize,
    ties: TieSet,
}

impl Prefix {
    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }
}

/// Generator for the k-assignments of an `n`-vertex graph.
#[derive(Debug, Clone)]
pub struct Enumerator {
    n: usize,
    k: usize,
    strategy: Strategy,
    /// `candidates[m]`: the lists available to a vertex when colors `1..=m`
    /// are in use, in ascending lexicographic order.
    candidates: Arc<Vec<Vec<Vec<Color>>>>,
}

impl Enumerator {
    pub fn new(n: usize, k: usize, strategy: Strategy) -> Self {
        assert!(k >= 1, "list size must be positive");
        let candidates = (0..=n.saturating_sub(1) * k).map(|m| candidate_lists(m, k)).collect();
        Enumerator { n, k, strategy, candidates: Arc::new(candidates) }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn root(&self) -> Prefix {
        Prefix { lists: Vec::new(), colors_used: 0, ties: vec![vec![0]] }
    }

    pub fn stream(&self) -> AssignmentStream {
        self.stream_from(&self.root())
    }

    /// All assignments extending `prefix`, in enumeration order.
    pub fn stream_from(&self, prefix: &Prefix) -> AssignmentStream {
        let start = prefix.lists.len();
        let mut chosen = prefix.lists.clone();
        chosen.resize(self.n.max(start), Vec::new());
        let frames = if start < self.n {
            vec![Frame { colors_used: prefix.colors_used, next: 0, ties: prefix.ties.clone() }]
        } else {
            Vec::new()
        };
        AssignmentStream {
            enumerator: self.clone(),
            start,
            chosen,
            frames,
            pending_leaf: start >= self.n,
            last_ties: prefix.ties.clone(),
            last_colors: prefix.colors_used,
            yielded: 0,
            budget: None,
            exhausted: false,
            done: false,
        }
    }

    /// Every enumerated prefix of length `depth` (clamped to `n`), in order.
    /// Streaming from each in turn reproduces [`Enumerator::stream`].
    pub fn prefixes(&self, depth: usize) -> Vec<Prefix> {
        let depth = depth.min(self.n);
        let shallow = Enumerator { n: depth, ..self.clone() };
        let mut stream = shallow.stream();
        let mut out = Vec::new();
        while stream.advance() {
            out.push(Prefix {
                lists: stream.chosen.clone(),
                colors_used: stream.last_colors,
                ties: stream.last_ties.clone(),
            });
        }
        out
    }
}

/// Lists of size `k` over `1..=m+k` whose fresh colors are `m+1..=m+t` for
/// some `t`, sorted lexicographically.
fn candidate_lists(m: usize, k: usize) -> Vec<Vec<Color>> {
    fn subsets(from: &[Color], size: usize, acc: &mut Vec<Color>, out: &mut Vec<Vec<Color>>) {
        if acc.len() == size {
            out.push(acc.clone());
            return;
        }
        for i in 0..from.len() {
            if from.len() - i < size - acc.len() {
                break;
            }
            acc.push(from[i]);
            subsets(&from[i + 1..], size, acc, out);
            acc.pop();
        }
    }
    let old: Vec<Color> = (1..=m as Color).collect();
    let mut out = Vec::new();
    for fresh in 0..=k {
        if k - fresh > m {
            continue;
        }
        let mut olds = Vec::new();
        subsets(&old, k - fresh, &mut Vec::new(), &mut olds);
        for mut list in olds {
            list.extend((m + 1) as Color..=(m + fresh) as Color);
            out.push(list);
        }
    }
    out.sort();
    out
}

#[derive(Debug, Clone)]
struct Frame {
    colors_used: usize,
    next: usize,
    ties: TieSet,
}

/// Iterator over assignments. With a budget, stops after that many and
/// reports `exhausted() == false` if any were left unvisited.
#[derive(Debug, Clone)]
pub struct AssignmentStream {
    enumerator: Enumerator,
    start: usize,
    chosen: Vec<Vec<Color>>,
    frames: Vec<Frame>,
    pending_leaf: bool,
    last_ties: TieSet,
    last_colors: usize,
    yielded: u64,
    budget: Option<u64>,
    exhausted: bool,
    done: bool,
}

impl AssignmentStream {
    pub fn with_budget(mut self, budget: Option<u64>) -> Self {
        self.budget = budget;
        self
    }

    /// True once the stream has ended by running out of assignments.
    pub fn exhausted(&self) -> bool {
        self.exhausted
    }

    pub fn yielded(&self) -> u64 {
        self.yielded
    }

    pub fn k(&self) -> usize {
        self.enumerator.k
    }

    /// Advances and borrows the next assignment's lists without allocating.
    pub fn next_lists(&mut self) -> Option<&[Vec<Color>]> {
        if self.done {
            return None;
        }
        if self.budget.is_some_and(|b| self.yielded >= b) {
            self.done = true;
            self.exhausted = !self.advance();
            return None;
        }
        if self.advance() {
            self.yielded += 1;
            Some(&self.chosen)
        } else {
            self.done = true;
            self.exhausted = true;
            None
        }
    }

    fn advance(&mut self) -> bool {
        if self.pending_leaf {
            // zero-length tail: the prefix itself is the only assignment
            self.pending_leaf = false;
            return true;
        }
        let canonical = self.enumerator.strategy == Strategy::CanonicalFilter;
        let n = self.enumerator.n;
        while !self.frames.is_empty() {
            let depth = self.start + self.frames.len() - 1;
            let top = self.frames.last_mut().unwrap();
            let options = &self.enumerator.candidates[top.colors_used];
            if top.next == options.len() {
                self.frames.pop();
                continue;
            }
            let list = &options[top.next];
            top.next += 1;
            let m = top.colors_used;
            let fresh = list.iter().filter(|&&c| c as usize > m).count();
            let ties = if canonical {
                match extend_ties(&top.ties, m, list, fresh) {
                    Some(t) => t,
                    None => continue,
                }
            } else {
                Vec::new()
            };
            self.chosen[depth].clone_from(list);
            if depth + 1 == n {
                self.last_ties = ties;
                self.last_colors = m + fresh;
                return true;
            }
            self.frames.push(Frame { colors_used: m + fresh, next: 0, ties });
        }
        false
    }
}

/// Extends every tie relabeling over `list`. Returns `None` when one of them
/// maps `list` below itself, i.e. the prefix is not canonical.
fn extend_ties(ties: &TieSet, m: usize, list: &[Color], fresh: usize) -> Option<TieSet> {
    let old = &list[..list.len() - fresh];
    let mut out = Vec::new();
    let mut image = Vec::with_capacity(old.len());
    for pi in ties {
        image.clear();
        image.extend(old.iter().map(|&c| pi[c as usize]));
        image.sort_unstable();
        match image.as_slice().cmp(old) {
            std::cmp::Ordering::Less => return None,
            std::cmp::Ordering::Greater => continue,
            std::cmp::Ordering::Equal => {}
        }
        if fresh == 0 {
            out.push(pi.clone());
            continue;
        }
        for perm in permutations(fresh) {
            let mut ext = pi.clone();
            ext.extend(perm.iter().map(|&p| (m + 1 + p) as Color));
            out.push(ext);
        }
    }
    Some(out)
}

impl Iterator for AssignmentStream {
    type Item = ListAssignment;

    fn next(&mut self) -> Option<ListAssignment> {
        let k = self.enumerator.k;
        self.next_lists().map(|lists| ListAssignment { k, lists: lists.to_vec() })
    }
}

/// Assignments of `g` in first-use order, filtered to canonical forms.
pub fn enumerate_assignments(g: &Graph, k: usize, budget: Option<u64>) -> AssignmentStream {
    Enumerator::new(g.vertex_count(), k, Strategy::CanonicalFilter).stream().with_budget(budget)
}
