//! Brute-force oracles. Deliberately naive and independent of the solver:
//! they only read the graph's edge list and the raw color lists.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use prochoose::{Color, Graph, ListAssignment};

/// Every list-respecting map, in odometer order.
pub fn all_maps(lists: &[Vec<Color>]) -> Vec<Vec<Color>> {
    let mut out = vec![Vec::with_capacity(lists.len())];
    for list in lists {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                list.iter().map(move |&c| {
                    let mut f = prefix.clone();
                    f.push(c);
                    f
                })
            })
            .collect();
    }
    out
}

pub fn is_proper(g: &Graph, lists: &[Vec<Color>], f: &[Color]) -> bool {
    f.len() == lists.len()
        && f.iter().zip(lists).all(|(c, list)| list.contains(c))
        && g.edges().iter().all(|&(u, v)| f[u] != f[v])
}

fn uses(f: &[Color]) -> BTreeMap<Color, usize> {
    let mut m = BTreeMap::new();
    for &c in f {
        *m.entry(c).or_insert(0) += 1;
    }
    m
}

pub fn is_proportional(g: &Graph, lists: &[Vec<Color>], k: usize, f: &[Color]) -> bool {
    if !is_proper(g, lists, f) {
        return false;
    }
    let used = uses(f);
    let mut eta: BTreeMap<Color, usize> = BTreeMap::new();
    for list in lists {
        for &c in list {
            *eta.entry(c).or_insert(0) += 1;
        }
    }
    eta.iter().all(|(c, &e)| {
        let x = used.get(c).copied().unwrap_or(0);
        e / k <= x && x <= e.div_ceil(k)
    })
}

pub fn is_equitable(g: &Graph, lists: &[Vec<Color>], k: usize, f: &[Color]) -> bool {
    let cap = lists.len().div_ceil(k);
    is_proper(g, lists, f) && uses(f).values().all(|&x| x <= cap)
}

pub fn naive_proportional_exists(g: &Graph, lists: &[Vec<Color>], k: usize) -> bool {
    all_maps(lists).iter().any(|f| is_proportional(g, lists, k, f))
}

pub fn naive_equitable_exists(g: &Graph, lists: &[Vec<Color>], k: usize) -> bool {
    all_maps(lists).iter().any(|f| is_equitable(g, lists, k, f))
}

/// Almost-excessive colors (used ⌈η/k⌉ > η/k times) must number Σ(η mod k)/k;
/// for k = 2 that is half of the odd colors.
pub fn identity_holds(lists: &[Vec<Color>], k: usize, f: &[Color]) -> bool {
    let used = uses(f);
    let mut eta: BTreeMap<Color, usize> = BTreeMap::new();
    for list in lists {
        for &c in list {
            *eta.entry(c).or_insert(0) += 1;
        }
    }
    let residue_sum: usize = eta.values().map(|e| e % k).sum();
    let excessive = eta.iter().filter(|(c, &e)| e % k != 0 && used.get(c).copied().unwrap_or(0) == e.div_ceil(k)).count();
    residue_sum.is_multiple_of(k) && excessive * k == residue_sum
}

fn permutations(items: &[Color]) -> Vec<Vec<Color>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Orbit representative under color permutations: lexicographic minimum of
/// the flattened relabeled lists over every bijection of the palette onto
/// 1..=|palette|.
pub fn orbit_key(lists: &[Vec<Color>]) -> Vec<Color> {
    let palette: Vec<Color> = lists.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let targets: Vec<Color> = (1..=palette.len() as Color).collect();
    let mut best: Option<Vec<Color>> = None;
    for perm in permutations(&targets) {
        let map: BTreeMap<Color, Color> = palette.iter().copied().zip(perm).collect();
        let flat: Vec<Color> = lists
            .iter()
            .flat_map(|list| {
                let mut l: Vec<Color> = list.iter().map(|c| map[c]).collect();
                l.sort_unstable();
                l
            })
            .collect();
        if best.as_ref().is_none_or(|b| flat < *b) {
            best = Some(flat);
        }
    }
    best.unwrap_or_default()
}

fn subsets(palette: usize, k: usize) -> Vec<Vec<Color>> {
    fn rec(start: Color, end: Color, k: usize, acc: &mut Vec<Color>, out: &mut Vec<Vec<Color>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for c in start..=end {
            acc.push(c);
            rec(c + 1, end, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, palette as Color, k, &mut Vec::new(), &mut out);
    out
}

/// Every k-assignment on `n` vertices drawn from colors 1..=k·n. Any
/// k-assignment is a relabeling of one of these.
pub fn all_assignments(n: usize, k: usize) -> Vec<Vec<Vec<Color>>> {
    let choices = subsets(k * n, k);
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Vec<Color>>| {
                choices.iter().map(move |s| {
                    let mut p = prefix.clone();
                    p.push(s.clone());
                    p
                })
            })
            .collect();
    }
    out
}

/// Number of color orbits of k-assignments on `n` vertices.
pub fn orbit_count(n: usize, k: usize) -> usize {
    all_assignments(n, k).iter().map(|l| orbit_key(l)).collect::<BTreeSet<_>>().len()
}

/// Checks that the enumerator's stream hits every orbit, and exactly once
/// when `exactly_once`.
pub fn stream_covers_orbits(stream: impl Iterator<Item = ListAssignment>, n: usize, k: usize, exactly_once: bool) -> bool {
    let want: BTreeSet<Vec<Color>> = all_assignments(n, k).iter().map(|l| orbit_key(l)).collect();
    let mut seen = BTreeSet::new();
    for l in stream {
        if !seen.insert(orbit_key(l.lists())) && exactly_once {
            return false;
        }
    }
    seen == want
}
