//! Simple undirected graphs with a canonical edge order.
//!
//! Vertices are `0..n`. Edges are stored as pairs `(u, v)` with `u < v`,
//! sorted lexicographically; the position of an edge in that list is its
//! edge index, and every colouring, separation and JSON artifact in this
//! crate refers to edges by that index.

mod canon;
mod io;
mod structure;
mod vertex_set;

pub use canon::{are_isomorphic, canonical_form, canonical_labelling, CANONICAL_FORM_MAX_N};
pub use io::{emit_edgelist, emit_graph6, parse_edgelist, parse_graph, parse_graph6, GraphFormat, ParsedGraph};
pub use structure::{
    blocks, connected_components, contract_edge, contract_edge_with_map, is_biconnected, is_connected,
    is_cut, is_stable_set, Separation,
};
pub use vertex_set::VertexSet;

pub(crate) use structure::components_avoiding;

use crate::error::{Error, Result};

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Edge endpoints may be given in
    /// either order; loops, duplicates and out-of-range vertices are errors.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Builds a graph whose vertex count is one more than the largest endpoint.
    pub fn from_edges<I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let list: Vec<_> = edges.into_iter().collect();
        let n = list.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
        Self::new(n, list)
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Builds a graph from an edge collection that may contain duplicates
    /// (merged) but no loops.
    pub(crate) fn from_edges_dedup(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in &mut edges {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        edges.sort_unstable();
        edges.dedup();
        debug_assert!(edges.iter().all(|&(a, b)| a != b && b < n));
        Self::from_sorted(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbourhood(&self, v: usize) -> VertexSet {
        VertexSet::from_vertices(self.n, self.adj[v].iter().copied())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// `(neighbour, edge index)` pairs for every edge at `v`.
    pub fn incident(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj[v].iter().map(move |&w| (w, self.edge_index(v, w).expect("adjacency consistent")))
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&v| self.adj[v].is_empty())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn check_edge_index(&self, e: usize) -> Result<()> {
        if e < self.m() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange { index: e, m: self.m() })
        }
    }

    /// Subgraph induced by `keep`, relabelled to `0..|keep|` in increasing
    /// order. Also returns the new-to-old vertex map.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| new_id[a] != usize::MAX && new_id[b] != usize::MAX)
            .map(|&(a, b)| (new_id[a], new_id[b]))
            .collect();
        (Graph::from_edges_dedup(old.len(), edges), old)
    }

    /// Subgraph formed by the given edges and their endpoints, relabelled in
    /// increasing vertex order. Returns the new-to-old vertex map.
    pub fn edge_subgraph(&self, edge_indices: &[usize]) -> (Graph, Vec<usize>) {
        let mut used = VertexSet::new(self.n);
        for &e in edge_indices {
            let (a, b) = self.edges[e];
            used.insert(a);
            used.insert(b);
        }
        let old = used.to_vec();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = edge_indices
            .iter()
            .map(|&e| {
                let (a, b) = self.edges[e];
                (new_id[a], new_id[b])
            })
            .collect();
        (Graph::from_edges_dedup(old.len(), edges), old)
    }

    /// Same vertex set, with the extra edges added (existing ones ignored).
    pub fn with_edges_added<I: IntoIterator<Item = (usize, usize)>>(&self, extra: I) -> Graph {
        let mut edges = self.edges.clone();
        edges.extend(extra);
        Graph::from_edges_dedup(self.n, edges)
    }

    /// Same vertex set, without edge `e`.
    pub fn without_edge(&self, e: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(e);
        Graph::from_edges_dedup(self.n, edges)
    }

    /// Applies the vertex relabelling `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Graph::from_edges_dedup(self.n, edges)
    }

    /// Disjoint union, with `other`'s vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)))
            .collect();
        Graph::from_edges_dedup(self.n + other.n, edges)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}
