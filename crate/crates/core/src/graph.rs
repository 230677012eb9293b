use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::set::{VertexSet, MAX_ORDER};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is kept as one [`VertexSet`] per vertex, so every graph is
/// limited to [`MAX_ORDER`] vertices. Generators may attach a provenance
/// name and, for maximal outerplanar graphs, the outer-cycle order.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    name: Option<String>,
    outer_cycle: Option<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::SizeCap {
                routine: "graph",
                order: n,
                limit: MAX_ORDER,
            });
        }
        Ok(Graph {
            adj: vec![VertexSet::empty(); n],
            name: None,
            outer_cycle: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        Ok(())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n(),
            })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match (s - self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n(),
            }),
            None => Ok(()),
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v] | VertexSet::singleton(v)
    }

    /// Vertices with at least one neighbor in `s`.
    pub fn neighbors_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(VertexSet::empty(), |acc, v| acc | self.adj[v])
    }

    pub fn closed_neighbors_of_set(&self, s: VertexSet) -> VertexSet {
        self.neighbors_of_set(s) | s
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, a)| a.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|a| a.is_empty())
    }

    /// Number of edges of the subgraph induced by `s`.
    pub fn induced_edge_count(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.adj[v] & s).len()).sum::<usize>() / 2
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter()
            .all(|v| (s - VertexSet::singleton(v)).is_subset(self.adj[v]))
    }

    /// Vertices of `within` reachable from `start` inside the subgraph
    /// induced by `within`.
    pub fn reach_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighbors_of_set(frontier) & within;
            frontier = next - seen;
            seen |= frontier;
        }
        seen
    }

    /// Whether `s` induces a connected subgraph. The empty set does not.
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.first() {
            Some(v) => self.reach_within(v, s) == s,
            None => false,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.is_connected_set(self.vertices())
    }

    /// Whether `s` induces an acyclic subgraph.
    pub fn is_forest_set(&self, s: VertexSet) -> bool {
        let mut components = 0;
        let mut rest = s;
        while let Some(v) = rest.first() {
            rest = rest - self.reach_within(v, s);
            components += 1;
        }
        self.induced_edge_count(s) + components == s.len()
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.is_connected() && self.edge_count() + 1 == self.n()
    }

    /// Unweighted distances from `src`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for w in self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in
    /// ascending order of the original indices.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let order = keep.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| (self.adj[v] & keep).iter().map(|w| index[w]).collect())
            .collect();
        Graph {
            adj,
            name: None,
            outer_cycle: None,
        }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n();
        let mut g = Graph::new(shift + other.n())?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + shift, v + shift)?;
        }
        Ok(g)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = Some(name.into());
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.set_name(name);
        self
    }

    /// Outer-cycle order recorded by a generator or recovered by
    /// [`crate::mop::is_mop`].
    pub fn outer_cycle(&self) -> Option<&[usize]> {
        self.outer_cycle.as_deref()
    }

    /// Records an outer-cycle order. The order must be a permutation of the
    /// vertices whose consecutive pairs (cyclically) are edges.
    pub fn set_outer_cycle(&mut self, order: Vec<usize>) -> Result<()> {
        let n = self.n();
        let as_set: VertexSet = order.iter().copied().collect();
        if order.len() != n || as_set != self.vertices() {
            return Err(Error::InvalidSize(format!(
                "outer cycle must list each of the {n} vertices once"
            )));
        }
        if n >= 3 {
            for i in 0..n {
                let (a, b) = (order[i], order[(i + 1) % n]);
                if !self.has_edge(a, b) {
                    return Err(Error::InvalidSize(format!(
                        "outer cycle uses {a}-{b}, which is not an edge"
                    )));
                }
            }
        }
        self.outer_cycle = Some(order);
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        let mut d = f.debug_struct("Graph");
        if let Some(name) = &self.name {
            d.field("name", name);
        }
        d.field("n", &self.n()).field("edges", &edges).finish()
    }
}
