//! Complete search for proper, equitable and proportional list colorings,
//! and the validity predicates that go with them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::assign::{Color, ListAssignment, MultiplicityProfile};
use crate::graph::{Graph, Vertex};

/// Which class-size constraint a list coloring must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Proper L-coloring, no size constraint.
    Proper,
    /// Every color used at most ⌈|V|/k⌉ times.
    Equitable,
    /// Every palette color c used ⌊η(c)/k⌋ or ⌈η(c)/k⌉ times.
    Proportional,
}

/// A color per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring(pub Vec<Color>);

impl Coloring {
    pub fn color(&self, v: Vertex) -> Color {
        self.0[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    /// |f⁻¹(c)| for every color that is used.
    pub fn class_sizes(&self) -> BTreeMap<Color, usize> {
        let mut sizes = BTreeMap::new();
        for &c in &self.0 {
            *sizes.entry(c).or_insert(0) += 1;
        }
        sizes
    }

    pub fn class_size(&self, c: Color) -> usize {
        self.0.iter().filter(|&&x| x == c).count()
    }
}

/// Per-color bounds on class sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassBudget {
    pub bounds: BTreeMap<Color, (usize, usize)>,
}

impl ClassBudget {
    pub fn new(l: &ListAssignment, mode: Mode) -> Self {
        let profile = l.multiplicities();
        let cap = l.vertex_count().div_ceil(l.k());
        let bounds = profile
            .eta
            .keys()
            .map(|&c| {
                let b = match mode {
                    Mode::Proper => (0, usize::MAX),
                    Mode::Equitable => (0, cap),
                    Mode::Proportional => (profile.lower(c), profile.upper(c)),
                };
                (c, b)
            })
            .collect();
        ClassBudget { bounds }
    }
}

pub fn is_proper_l_coloring(g: &Graph, l: &ListAssignment, f: &Coloring) -> bool {
    let n = g.vertex_count();
    f.0.len() == n
        && l.vertex_count() == n
        && (0..n).all(|v| l.list(v).binary_search(&f.0[v]).is_ok())
        && g.edges().iter().all(|&(u, v)| f.0[u] != f.0[v])
}

pub fn is_equitable_l_coloring(g: &Graph, l: &ListAssignment, f: &Coloring) -> bool {
    let cap = g.vertex_count().div_ceil(l.k());
    is_proper_l_coloring(g, l, f) && f.class_sizes().values().all(|&s| s <= cap)
}

/// Checks every palette color, including ones `f` never uses.
pub fn is_proportional_l_coloring(g: &Graph, l: &ListAssignment, f: &Coloring) -> bool {
    if !is_proper_l_coloring(g, l, f) {
        return false;
    }
    let profile = l.multiplicities();
    let sizes = f.class_sizes();
    profile.eta.keys().all(|&c| {
        let s = sizes.get(&c).copied().unwrap_or(0);
        profile.lower(c) <= s && s <= profile.upper(c)
    })
}

pub fn is_valid(g: &Graph, l: &ListAssignment, f: &Coloring, mode: Mode) -> bool {
    match mode {
        Mode::Proper => is_proper_l_coloring(g, l, f),
        Mode::Equitable => is_equitable_l_coloring(g, l, f),
        Mode::Proportional => is_proportional_l_coloring(g, l, f),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColorClass {
    /// k | η(c) and used exactly η(c)/k times.
    Perfect,
    /// k ∤ η(c), used ⌈η(c)/k⌉ times.
    AlmostExcessive,
    /// k ∤ η(c), used ⌊η(c)/k⌋ times.
    AlmostDeficient,
    Violating,
}

pub fn classify_colors(l: &ListAssignment, f: &Coloring) -> BTreeMap<Color, ColorClass> {
    let profile = l.multiplicities();
    let sizes = f.class_sizes();
    profile
        .eta
        .keys()
        .map(|&c| {
            let used = sizes.get(&c).copied().unwrap_or(0);
            let (lo, hi) = (profile.lower(c), profile.upper(c));
            let class = if lo == hi {
                if used == lo { ColorClass::Perfect } else { ColorClass::Violating }
            } else if used == hi {
                ColorClass::AlmostExcessive
            } else if used == lo {
                ColorClass::AlmostDeficient
            } else {
                ColorClass::Violating
            };
            (c, class)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("almost-excessive count {count} but residue sum {residue_sum} with k = {k}")]
pub struct IdentityViolation {
    pub count: usize,
    pub residue_sum: usize,
    pub k: usize,
}

/// Number of almost-excessive colors, checked against (1/k)·Σ (η(c) mod k).
/// An `Err` means `f` was not proportional or something upstream is broken.
pub fn count_almost_excessive(l: &ListAssignment, f: &Coloring) -> Result<usize, IdentityViolation> {
    let count = classify_colors(l, f).values().filter(|&&c| c == ColorClass::AlmostExcessive).count();
    let residue_sum: usize = l.multiplicities().residues().values().sum();
    let k = l.k();
    if residue_sum == count * k {
        Ok(count)
    } else {
        Err(IdentityViolation { count, residue_sum, k })
    }
}

/// For k = 2: exactly half of the odd-multiplicity colors are used
/// (η+1)/2 times.
pub fn half_odd_colors_excessive(l: &ListAssignment, f: &Coloring) -> bool {
    let profile: MultiplicityProfile = l.multiplicities();
    let odd = profile.odd_colors();
    let excessive = odd.iter().filter(|&&c| f.class_size(c) == profile.eta(c).div_ceil(2)).count();
    odd.len().is_multiple_of(2) && 2 * excessive == odd.len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Budget pruning (upper caps, unreachable lower bounds, total deficit).
    /// Off means only properness is enforced during the search and class
    /// sizes are checked at the leaves.
    pub pruning: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { pruning: true }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
}

/// Depth-first search over vertices in descending-degree order (ties by
/// index), colors ascending. Complete: `None` means no coloring exists.
pub fn find_coloring(g: &Graph, l: &ListAssignment, mode: Mode) -> Option<Coloring> {
    let mut stats = SearchStats::default();
    search(g, l.k(), l.lists(), mode, SolverConfig::default(), &mut stats)
}

pub fn find_coloring_with(
    g: &Graph,
    l: &ListAssignment,
    mode: Mode,
    config: SolverConfig,
    stats: &mut SearchStats,
) -> Option<Coloring> {
    search(g, l.k(), l.lists(), mode, config, stats)
}

/// Entry point on raw sorted lists, used by the deciders to avoid building a
/// [`ListAssignment`] per enumerated assignment.
pub(crate) fn search(
    g: &Graph,
    k: usize,
    lists: &[Vec<Color>],
    mode: Mode,
    config: SolverConfig,
    stats: &mut SearchStats,
) -> Option<Coloring> {
    let n = g.vertex_count();
    debug_assert_eq!(lists.len(), n);
    let mut palette: Vec<Color> = lists.iter().flatten().copied().collect();
    palette.sort_unstable();
    palette.dedup();
    let index = |c: Color| palette.binary_search(&c).unwrap();

    let dense: Vec<Vec<usize>> = lists.iter().map(|l| l.iter().map(|&c| index(c)).collect()).collect();
    let mut eta = vec![0usize; palette.len()];
    for &c in dense.iter().flatten() {
        eta[c] += 1;
    }
    let cap = n.div_ceil(k);
    let (lower, upper): (Vec<usize>, Vec<usize>) = eta
        .iter()
        .map(|&e| match mode {
            Mode::Proper => (0, usize::MAX),
            Mode::Equitable => (0, cap),
            Mode::Proportional => (e / k, e.div_ceil(k)),
        })
        .unzip();

    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut state = Search {
        g,
        order,
        lists: dense,
        lower,
        upper,
        pruning: config.pruning,
        count: vec![0; palette.len()],
        avail: eta,
        deficit: 0,
        assigned: vec![usize::MAX; n],
        nodes: 0,
    };
    state.deficit = state.lower.iter().sum();
    let found = state.feasible(0) && state.descend(0);
    stats.nodes += state.nodes;
    found.then(|| Coloring(state.assigned.iter().map(|&c| palette[c]).collect()))
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<Vertex>,
    lists: Vec<Vec<usize>>,
    lower: Vec<usize>,
    upper: Vec<usize>,
    pruning: bool,
    count: Vec<usize>,
    /// Unassigned vertices whose list contains the color.
    avail: Vec<usize>,
    /// Σ max(0, lower − count).
    deficit: usize,
    assigned: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    /// Whether the remaining `n − depth` vertices could still meet every
    /// lower bound. Only colors in `touched` can have changed status.
    fn feasible_for(&self, depth: usize, touched: &[usize]) -> bool {
        touched.iter().all(|&c| self.count[c] + self.avail[c] >= self.lower[c])
            && self.deficit <= self.order.len() - depth
    }

    fn feasible(&self, depth: usize) -> bool {
        !self.pruning || {
            let all: Vec<usize> = (0..self.count.len()).collect();
            self.feasible_for(depth, &all)
        }
    }

    fn descend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return (0..self.count.len()).all(|c| self.lower[c] <= self.count[c] && self.count[c] <= self.upper[c]);
        }
        let v = self.order[depth];
        let list = std::mem::take(&mut self.lists[v]);
        for &c in &list {
            self.avail[c] -= 1;
        }
        let mut found = false;
        for &c in &list {
            if self.pruning && self.count[c] >= self.upper[c] {
                continue;
            }
            if self.g.neighbors(v).iter().any(|&w| self.assigned[w] == c) {
                continue;
            }
            self.nodes += 1;
            self.assigned[v] = c;
            self.count[c] += 1;
            let was_short = self.count[c] <= self.lower[c];
            if was_short {
                self.deficit -= 1;
            }
            if (!self.pruning || self.feasible_for(depth + 1, &list)) && self.descend(depth + 1) {
                found = true;
                break;
            }
            if was_short {
                self.deficit += 1;
            }
            self.count[c] -= 1;
            self.assigned[v] = usize::MAX;
        }
        if !found {
            for &c in &list {
                self.avail[c] += 1;
            }
        }
        self.lists[v] = list;
        found
    }
}

/// Proper coloring with colors `1..=k` and every class of size ⌊n/k⌋ or
/// ⌈n/k⌉. Vertices are colored in index order and color j + 1 may only
/// appear after color j has, so vertex 0 always gets color 1.
pub fn find_equitable_k_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.vertex_count();
    if k == 0 {
        return (n == 0).then(|| Coloring(Vec::new()));
    }
    let (lo, hi) = (n / k, n.div_ceil(k));

    #[allow(clippy::too_many_arguments)]
    fn rec(g: &Graph, k: usize, lo: usize, hi: usize, v: usize, opened: usize, f: &mut [usize], size: &mut [usize]) -> bool {
        let n = f.len();
        let deficit: usize = size.iter().map(|&s| lo.saturating_sub(s)).sum();
        if deficit > n - v {
            return false;
        }
        if v == n {
            return true;
        }
        for c in 0..(opened + 1).min(k) {
            if size[c] == hi || g.neighbors(v).iter().any(|&w| w < v && f[w] == c) {
                continue;
            }
            f[v] = c;
            size[c] += 1;
            if rec(g, k, lo, hi, v + 1, opened.max(c + 1), f, size) {
                return true;
            }
            size[c] -= 1;
        }
        false
    }

    let mut f = vec![0; n];
    let mut size = vec![0; k];
    rec(g, k, lo, hi, 0, 0, &mut f, &mut size).then(|| Coloring(f.iter().map(|&c| c as Color + 1).collect()))
}

pub fn is_equitable_k_coloring(g: &Graph, k: usize, f: &Coloring) -> bool {
    let n = g.vertex_count();
    if f.0.len() != n || f.0.iter().any(|&c| c == 0 || c as usize > k) {
        return false;
    }
    if g.edges().iter().any(|&(u, v)| f.0[u] == f.0[v]) {
        return false;
    }
    let sizes = f.class_sizes();
    (1..=k as Color).all(|c| {
        let s = sizes.get(&c).copied().unwrap_or(0);
        n / k <= s && s <= n.div_ceil(k)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path, star, wang_lih_tree};

    fn la(lists: &[&[Color]]) -> ListAssignment {
        ListAssignment::new(lists[0].len(), lists.iter().map(|l| l.to_vec()).collect()).unwrap()
    }

    fn c4_witness() -> ListAssignment {
        la(&[&[1, 2], &[2, 3], &[1, 2], &[2, 3]])
    }

    /// All list-respecting maps, by brute force.
    fn all_maps(l: &ListAssignment) -> Vec<Coloring> {
        let mut out = vec![Vec::new()];
        for list in l.lists() {
            out = out.into_iter().flat_map(|f| list.iter().map(move |&c| [f.clone(), vec![c]].concat())).collect();
        }
        out.into_iter().map(Coloring).collect()
    }

    #[test]
    fn proper_predicate() {
        let g = path(3);
        let l = ListAssignment::uniform(3, &[1, 2]).unwrap();
        assert!(is_proper_l_coloring(&g, &l, &Coloring(vec![1, 2, 1])));
        assert!(!is_proper_l_coloring(&g, &l, &Coloring(vec![1, 1, 2])));
        assert!(!is_proper_l_coloring(&g, &l, &Coloring(vec![1, 3, 1])));
    }

    #[test]
    fn equitable_predicate() {
        let l4 = ListAssignment::uniform(4, &[1, 2]).unwrap();
        assert!(is_equitable_l_coloring(&path(4), &l4, &Coloring(vec![1, 2, 1, 2])));
        let l3 = ListAssignment::uniform(3, &[1, 2]).unwrap();
        assert!(!is_equitable_l_coloring(&Graph::empty(3), &l3, &Coloring(vec![1, 1, 1])));
    }

    #[test]
    fn proportional_predicate() {
        let g = path(3);
        let l = ListAssignment::uniform(3, &[1, 2]).unwrap();
        assert!(is_proportional_l_coloring(&g, &l, &Coloring(vec![1, 2, 1])));
        // η = (2, 3, 1): color 1 exactly once, color 2 once or twice, color 3 at most once
        let l = la(&[&[1, 2], &[2, 3], &[1, 2]]);
        assert!(is_proportional_l_coloring(&g, &l, &Coloring(vec![1, 3, 2])));
        // an unused color with positive lower bound fails
        assert!(!is_proportional_l_coloring(&Graph::empty(3), &l, &Coloring(vec![2, 2, 2])));

        let c4 = cycle(4).unwrap();
        let maps = all_maps(&c4_witness());
        assert_eq!(maps.len(), 16);
        assert!(maps.iter().all(|f| !is_proportional_l_coloring(&c4, &c4_witness(), f)));
        assert!(maps.iter().any(|f| is_proper_l_coloring(&c4, &c4_witness(), f)));
    }

    #[test]
    fn classification() {
        let l = ListAssignment::uniform(3, &[1, 2]).unwrap();
        let cls = classify_colors(&l, &Coloring(vec![1, 2, 1]));
        assert_eq!(cls[&1], ColorClass::AlmostExcessive);
        assert_eq!(cls[&2], ColorClass::AlmostDeficient);
        let l = ListAssignment::uniform(4, &[1, 2]).unwrap();
        let cls = classify_colors(&l, &Coloring(vec![1, 2, 1, 2]));
        assert!(cls.values().all(|&c| c == ColorClass::Perfect));
        let cls = classify_colors(&l, &Coloring(vec![1, 1, 1, 2]));
        assert!(cls.values().all(|&c| c == ColorClass::Violating));
    }

    #[test]
    fn almost_excessive_counts() {
        let l = ListAssignment::uniform(3, &[1, 2]).unwrap();
        assert_eq!(count_almost_excessive(&l, &Coloring(vec![1, 2, 1])), Ok(1));
        let l = ListAssignment::uniform(4, &[1, 2]).unwrap();
        assert_eq!(count_almost_excessive(&l, &Coloring(vec![1, 2, 1, 2])), Ok(0));
        // not proportional: the identity fails
        let l = ListAssignment::uniform(3, &[1, 2]).unwrap();
        assert!(count_almost_excessive(&l, &Coloring(vec![1, 1, 1])).is_err());
    }

    #[test]
    fn find_coloring_examples() {
        let l = ListAssignment::uniform(3, &[1, 2]).unwrap();
        let f = find_coloring(&path(3), &l, Mode::Proportional).unwrap();
        assert!(is_proportional_l_coloring(&path(3), &l, &f));
        assert_eq!(find_coloring(&cycle(4).unwrap(), &c4_witness(), Mode::Proportional), None);
        assert!(find_coloring(&cycle(4).unwrap(), &c4_witness(), Mode::Proper).is_some());
    }

    #[test]
    fn wang_lih_assignment_has_no_equitable_coloring() {
        for k in [3, 4] {
            let t = wang_lih_tree(k).unwrap();
            let mut lists = vec![Vec::new(); t.graph.vertex_count()];
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
            let l = ListAssignment::new(2, lists).unwrap();
            assert_eq!(find_coloring(&t.graph, &l, Mode::Equitable), None);
            assert!(find_coloring(&t.graph, &l, Mode::Proper).is_some());
        }
    }

    #[test]
    fn pruning_does_not_change_answers() {
        let c4 = cycle(4).unwrap();
        for mode in [Mode::Proper, Mode::Equitable, Mode::Proportional] {
            for l in crate::assign::enumerate_assignments(&c4, 2, None) {
                let mut s = SearchStats::default();
                let on = find_coloring_with(&c4, &l, mode, SolverConfig { pruning: true }, &mut s);
                let off = find_coloring_with(&c4, &l, mode, SolverConfig { pruning: false }, &mut s);
                assert_eq!(on.is_some(), off.is_some());
                if let Some(f) = on.as_ref().or(off.as_ref()) {
                    assert!(is_valid(&c4, &l, f, mode));
                }
                let brute = all_maps(&l).iter().any(|f| is_valid(&c4, &l, f, mode));
                assert_eq!(brute, on.is_some());
            }
        }
    }

    #[test]
    fn equitable_k_colorings() {
        assert_eq!(find_equitable_k_coloring(&star(3), 2), None);
        let f = find_equitable_k_coloring(&path(4), 2).unwrap();
        assert_eq!(f, Coloring(vec![1, 2, 1, 2]));
        let f = find_equitable_k_coloring(&star(3), 3).unwrap();
        assert!(is_equitable_k_coloring(&star(3), 3, &f));
        let mut sizes: Vec<usize> = f.class_sizes().values().copied().collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2]);
        // P3+P3 splits 3+3
        let pp = crate::graph::linear_forest(&[3, 3]);
        assert!(is_equitable_k_coloring(&pp, 2, &find_equitable_k_coloring(&pp, 2).unwrap()));
    }

    #[test]
    fn k_equals_one_singletons() {
        let l = la(&[&[1]]);
        assert!(find_coloring(&path(1), &l, Mode::Proportional).is_some());
        let l = la(&[&[1], &[1]]);
        assert_eq!(find_coloring(&path(2), &l, Mode::Proportional), None);
        assert!(find_coloring(&Graph::empty(2), &l, Mode::Proportional).is_some());
    }
}
