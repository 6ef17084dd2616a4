//! Simple undirected graphs, structural queries, and the graph families used
//! throughout the crate.
//!
//! Vertices are the indices `0..vertex_count`. Every generator documents its
//! labeling; witnesses and certificates depend on those labelings being stable.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge {u}-{v} out of range for {n} vertices")]
    OutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// An immutable finite simple graph.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
}

/// Unvalidated edge-list form, used for serialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawGraph {
    pub vertex_count: usize,
    pub edges: Vec<[Vertex; 2]>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;

    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        Graph::from_edges(raw.vertex_count, raw.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        g.to_raw()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], edges: Vec::new() }
    }

    /// Builds a graph, rejecting self-loops, repeated edges (in either
    /// orientation) and endpoints outside `0..n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
            list.push((u.min(v), u.max(v)));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        list.sort_unstable();
        Ok(Graph { adj, edges: list })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Δ(G); zero for edgeless (and empty) graphs.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    pub fn to_raw(&self) -> RawGraph {
        RawGraph {
            vertex_count: self.vertex_count(),
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_profile(&self) -> ComponentProfile {
        let comps = self.components();
        let is_linear_forest = comps.iter().all(|c| self.is_path_component(c));
        let mut component_orders: Vec<usize> = comps.iter().map(Vec::len).collect();
        component_orders.sort_unstable_by(|a, b| b.cmp(a));
        ComponentProfile { component_orders, is_linear_forest }
    }

    fn is_path_component(&self, comp: &[Vertex]) -> bool {
        let edges: usize = comp.iter().map(|&v| self.degree(v)).sum::<usize>() / 2;
        edges + 1 == comp.len() && comp.iter().all(|&v| self.degree(v) <= 2)
    }

    pub fn is_linear_forest(&self) -> bool {
        self.component_profile().is_linear_forest
    }

    /// True iff the graph is a linear forest whose largest component has at
    /// most five vertices and whose other components have at most two.
    /// These are exactly the proportionally 2-choosable graphs.
    pub fn has_proportional_2_profile(&self) -> bool {
        let profile = self.component_profile();
        profile.is_linear_forest && orders_fit_proportional_2_profile(&profile.component_orders)
    }

    /// A proper 2-coloring as `(side_0, side_1)`, or `None` when the graph
    /// has an odd cycle. Each component's least vertex goes on side 0.
    pub fn bipartition(&self) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        let n = self.vertex_count();
        let mut side: Vec<Option<u8>> = vec![None; n];
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(0);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let s = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(1 - s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (a, b): (Vec<_>, Vec<_>) = (0..n).partition(|&v| side[v] == Some(0));
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Subgraph induced by `keep`; vertices are renumbered in the order given.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::from_edges(keep.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    pub fn without_vertex(&self, v: Vertex) -> Graph {
        let keep: Vec<Vertex> = (0..self.vertex_count()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let (a, b) = (u.min(v), u.max(v));
        let edges = self.edges.iter().copied().filter(|&e| e != (a, b));
        Graph::from_edges(self.vertex_count(), edges).expect("edge deletion keeps the graph simple")
    }

    /// Repeatedly deletes degree-1 vertices. Isolated vertices survive, so a
    /// tree reduces to a single vertex. Surviving vertices keep their
    /// relative order.
    pub fn core(&self) -> Graph {
        let n = self.vertex_count();
        let mut alive = vec![true; n];
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut stack: Vec<Vertex> = (0..n).filter(|&v| deg[v] == 1).collect();
        while let Some(v) = stack.pop() {
            if !alive[v] || deg[v] != 1 {
                continue;
            }
            alive[v] = false;
            for &w in &self.adj[v] {
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        let keep: Vec<Vertex> = (0..n).filter(|&v| alive[v]).collect();
        self.induced(&keep)
    }

    /// Classical 2-choosability: every component's core is K₁, an even cycle,
    /// or a theta graph Θ(2, 2, 2m).
    pub fn is_2_choosable(&self) -> bool {
        let core = self.core();
        core.components().iter().all(|comp| {
            let c = core.induced(comp);
            c.vertex_count() == 1 || c.is_even_cycle() || c.is_theta_22_even()
        })
    }

    fn is_even_cycle(&self) -> bool {
        let n = self.vertex_count();
        n >= 4 && n.is_multiple_of(2) && self.adj.iter().all(|a| a.len() == 2) && self.components().len() == 1
    }

    /// Connected, exactly two vertices of degree 3, all others of degree 2,
    /// and the three branch paths have lengths 2, 2 and an even number.
    fn is_theta_22_even(&self) -> bool {
        let branch: Vec<Vertex> = (0..self.vertex_count()).filter(|&v| self.degree(v) == 3).collect();
        if branch.len() != 2
            || self.adj.iter().any(|a| a.len() != 2 && a.len() != 3)
            || self.components().len() != 1
        {
            return false;
        }
        let (x, y) = (branch[0], branch[1]);
        let mut lengths = Vec::with_capacity(3);
        for &first in &self.adj[x] {
            let (mut prev, mut cur, mut len) = (x, first, 1);
            while cur != y {
                if self.degree(cur) != 2 {
                    return false;
                }
                let next = if self.adj[cur][0] == prev { self.adj[cur][1] } else { self.adj[cur][0] };
                prev = cur;
                cur = next;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        lengths[0] == 2 && lengths[1] == 2 && lengths[2] % 2 == 0
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.vertex_count(), self.edges)
    }
}

/// Component orders (descending) and whether every component is a path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentProfile {
    pub component_orders: Vec<usize>,
    pub is_linear_forest: bool,
}

impl ComponentProfile {
    pub fn fits_proportional_2_profile(&self) -> bool {
        self.is_linear_forest && orders_fit_proportional_2_profile(&self.component_orders)
    }
}

/// The order-only half of [`Graph::has_proportional_2_profile`]: largest
/// part at most 5, every other part at most 2.
pub fn orders_fit_proportional_2_profile(orders: &[usize]) -> bool {
    let mut sorted = orders.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted.first().is_none_or(|&m| m <= 5) && sorted.get(1).is_none_or(|&m| m <= 2)
}

/// Path P_n on vertices `0..n` in path order.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// Cycle C_n on `0..n` in cyclic order. Requires `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// Star K_{1,m}: center 0, leaves `1..=m`.
pub fn star(m: usize) -> Graph {
    Graph::from_edges(m + 1, (1..=m).map(|leaf| (0, leaf))).unwrap()
}

/// K_{m,m} with one side on the even indices and the other on the odd ones,
/// so K_{2,2} is literally the cycle 0-1-2-3.
pub fn complete_bipartite(m: usize) -> Graph {
    let n = 2 * m;
    let edges = (0..n).step_by(2).flat_map(|a| (1..n).step_by(2).map(move |b| (a.min(b), a.max(b))));
    Graph::from_edges(n, edges).unwrap()
}

/// `g1` on `0..|g1|` followed by `g2` shifted past it.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let off = g1.vertex_count();
    let edges = g1.edges().iter().copied().chain(g2.edges().iter().map(|&(u, v)| (u + off, v + off)));
    Graph::from_edges(off + g2.vertex_count(), edges).unwrap()
}

/// Disjoint union of paths with the given orders, in the order given.
pub fn linear_forest(orders: &[usize]) -> Graph {
    orders.iter().fold(Graph::empty(0), |acc, &n| disjoint_union(&acc, &path(n)))
}

/// Disjoint union of `copies` stars K_{1,m}.
pub fn disjoint_stars(copies: usize, m: usize) -> Graph {
    (0..copies).fold(Graph::empty(0), |acc, _| disjoint_union(&acc, &star(m)))
}

/// The tree built from a path u–v–w by hanging `k` leaves on u, `k` on w and
/// `2k − 1` on v.
#[derive(Debug, Clone)]
pub struct WangLihTree {
    pub graph: Graph,
    pub k: usize,
    pub u: Vertex,
    pub v: Vertex,
    pub w: Vertex,
    pub leaves_u: Vec<Vertex>,
    pub leaves_w: Vec<Vertex>,
    pub leaves_v: Vec<Vertex>,
}

/// Labels: u = 0, v = 1, w = 2, then the leaves of u, of w, and of v.
pub fn wang_lih_tree(k: usize) -> Result<WangLihTree, GraphError> {
    if k < 3 {
        return Err(GraphError::InvalidParameter(format!("wang-lih tree needs k >= 3, got {k}")));
    }
    let (u, v, w) = (0, 1, 2);
    let leaves_u: Vec<Vertex> = (3..3 + k).collect();
    let leaves_w: Vec<Vertex> = (3 + k..3 + 2 * k).collect();
    let leaves_v: Vec<Vertex> = (3 + 2 * k..3 + 2 * k + 2 * k - 1).collect();
    let edges = [(u, v), (v, w)]
        .into_iter()
        .chain(leaves_u.iter().map(|&x| (u, x)))
        .chain(leaves_w.iter().map(|&x| (w, x)))
        .chain(leaves_v.iter().map(|&x| (v, x)));
    let graph = Graph::from_edges(4 * k + 2, edges)?;
    Ok(WangLihTree { graph, k, u, v, w, leaves_u, leaves_w, leaves_v })
}
