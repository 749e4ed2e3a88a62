//! Small simple undirected graphs with word-sized vertex sets.
//!
//! Every graph has at most [`MAX_VERTICES`] vertices so a [`VertexSet`] is a
//! single `u32`. All operations are pure and graphs are immutable once built.

mod canon;
mod enumerate;
mod graph6;
mod metrics;
pub mod named;
mod paths;
mod planarity;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{canonical_code, CanonicalCode, CANON_MAX_N};
pub use enumerate::{enumerate_all_connected_graphs, enumerate_all_graphs, ENUMERATE_MAX_N};
pub use graph6::{emit_graph6, parse_graph6, parse_graph6_lines};
pub use metrics::{Distance, Girth};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 31;

/// A set of vertices packed into one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 32 && self.0 & (1 << v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Lowest element, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u32);

impl Iterator for VertexIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Graph with the given edges; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from adjacency rows, checking symmetry, irreflexivity and range.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let full = VertexSet::full(n);
        for (u, row) in adj.iter().enumerate() {
            if !row.is_subset(full) {
                let bad = row.difference(full).first().unwrap_or(n);
                return Err(Error::VertexOutOfRange { vertex: bad, n });
            }
            if row.contains(u) {
                return Err(Error::LoopEdge(u));
            }
            for v in row.iter() {
                if !adj[v].contains(u) {
                    return Err(Error::InvalidArgument(format!("asymmetric adjacency between {u} and {v}")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<VertexSet>) -> Graph {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::from_edges(n, &[])
    }

    pub fn complete(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let full = VertexSet::full(n);
        Ok(Graph::from_adjacency_unchecked((0..n).map(|v| full.without(v)).collect()))
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        let edges: Vec<_> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
        Graph::from_edges(a + b, &edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Open neighborhood `N(v)`.
    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v].with(v))
    }

    /// Unchecked `N(v)` for hot loops.
    #[inline]
    pub fn nbrs(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Unchecked `N[v]` for hot loops.
    #[inline]
    pub fn closed_nbrs(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// Union of `N[v]` over `s`.
    pub fn closed_nbrs_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc.union(self.adj[v]))
    }

    /// Union of `N(v)` over `s`. May intersect `s`.
    pub fn open_nbrs_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    /// Induced subgraph on `s`, relabeled in increasing order; the returned
    /// vector maps new labels back to vertices of `self`.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if !s.is_subset(self.vertices()) {
            let bad = s.difference(self.vertices()).first().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex: bad, n: self.n });
        }
        let map = s.to_vec();
        let mut index = [usize::MAX; 32];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map.iter().map(|&v| self.adj[v].intersection(s).iter().map(|u| index[u]).collect()).collect();
        Ok((Graph::from_adjacency_unchecked(adj), map))
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument("permutation length mismatch".into()));
        }
        let seen: VertexSet = perm.iter().copied().collect();
        if perm.iter().any(|&p| p >= self.n) || seen.len() != self.n {
            return Err(Error::InvalidArgument("not a permutation".into()));
        }
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for u in 0..self.n {
            adj[perm[u]] = self.adj[u].iter().map(|v| perm[v]).collect();
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        Graph::from_adjacency_unchecked((0..self.n).map(|v| full.difference(self.adj[v]).without(v)).collect())
    }

    /// Adds a vertex `n` adjacent exactly to `nbrs`.
    pub fn add_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n + 1));
        }
        if !nbrs.is_subset(self.vertices()) {
            return Err(Error::InvalidArgument("new vertex neighbors out of range".into()));
        }
        let new = self.n;
        let mut adj = self.adj.clone();
        for v in nbrs.iter() {
            adj[v].insert(new);
        }
        adj.push(nbrs);
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Whether `s` induces a path in the given order.
    pub fn is_induced_path(&self, seq: &[usize]) -> bool {
        let set: VertexSet = seq.iter().copied().collect();
        if set.len() != seq.len() || seq.iter().any(|&v| v >= self.n) {
            return false;
        }
        seq.iter().enumerate().all(|(i, &v)| {
            let mut expected = VertexSet::EMPTY;
            if i > 0 {
                expected.insert(seq[i - 1]);
            }
            if i + 1 < seq.len() {
                expected.insert(seq[i + 1]);
            }
            self.adj[v].intersection(set) == expected
        })
    }

    /// Whether `s` induces a single cycle (connected, 2-regular, at least 3 vertices).
    pub fn induces_cycle(&self, s: VertexSet) -> bool {
        s.len() >= 3
            && s.iter().all(|v| self.adj[v].intersection(s).len() == 2)
            && self.component_within(s.first().unwrap_or(0), s) == s
    }
}
