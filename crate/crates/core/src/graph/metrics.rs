use serde::{Deserialize, Serialize};

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// BFS distance; unreachable vertices are `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

/// Length of a shortest cycle, or `Acyclic` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Girth {
    Cycle(usize),
    Acyclic,
}

impl Girth {
    /// Whether the girth is at least `bound` (forests always are).
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Girth::Cycle(g) => g >= bound,
            Girth::Acyclic => true,
        }
    }
}

impl Graph {
    pub fn bfs_distances(&self, u: usize) -> Result<Vec<Distance>> {
        self.check_vertex(u)?;
        Ok(self
            .bfs_layers_within(u, self.vertices())
            .into_iter()
            .map(|d| d.map_or(Distance::Infinite, Distance::Finite))
            .collect())
    }

    /// BFS distances from `u` using only vertices of `within`.
    pub(crate) fn bfs_layers_within(&self, u: usize, within: VertexSet) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        if !within.contains(u) {
            return dist;
        }
        dist[u] = Some(0);
        let mut seen = VertexSet::singleton(u);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let next = self.open_nbrs_of_set(frontier).intersection(within).difference(seen);
            for v in next.iter() {
                dist[v] = Some(d);
            }
            seen = seen.union(next);
            frontier = next;
        }
        dist
    }

    /// Vertices of `within` at distance exactly `d` from `u` inside `within`.
    pub fn distance_layer_within(&self, u: usize, within: VertexSet, d: usize) -> VertexSet {
        self.bfs_layers_within(u, within).iter().enumerate().filter(|(_, x)| **x == Some(d)).map(|(v, _)| v).collect()
    }

    /// Component of `v` in the subgraph induced on `within`; empty if `v ∉ within`.
    pub fn component_within(&self, v: usize, within: VertexSet) -> VertexSet {
        if !within.contains(v) {
            return VertexSet::EMPTY;
        }
        let mut comp = VertexSet::singleton(v);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let next = self.open_nbrs_of_set(frontier).intersection(within).difference(comp);
            comp = comp.union(next);
            frontier = next;
        }
        comp
    }

    pub fn component_of(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.component_within(v, self.vertices()))
    }

    /// Connected components in increasing order of their least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_within(v, rest);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_within(0, self.vertices()).len() == self.n
    }

    pub fn is_connected_within(&self, s: VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.component_within(v, s) == s,
        }
    }

    /// Largest eccentricity, or `Infinite` on disconnected graphs.
    pub fn diameter(&self) -> Distance {
        let mut best = 0;
        for u in 0..self.n {
            for d in self.bfs_layers_within(u, self.vertices()) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Distance::Infinite,
                }
            }
        }
        Distance::Finite(best)
    }

    /// Articulation points via DFS lowpoints.
    pub fn cut_vertices(&self) -> VertexSet {
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0; self.n];
        let mut cuts = VertexSet::EMPTY;
        let mut time = 0;
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            // Stack of (vertex, parent, remaining neighbours to visit).
            let mut stack = vec![(root, usize::MAX, self.adj[root])];
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            while let Some(&mut (v, parent, ref mut rest)) = stack.last_mut() {
                if let Some(w) = rest.first() {
                    rest.remove(w);
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, self.adj[w]));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if parent != root && low[v] >= disc[parent] {
                            cuts.insert(parent);
                        }
                    }
                }
            }
            if root_children > 1 {
                cuts.insert(root);
            }
        }
        cuts
    }

    /// Connected, at least 3 vertices and no cut vertex.
    pub fn is_two_connected(&self) -> Result<bool> {
        if self.n < 3 {
            return Err(Error::InvalidArgument(format!("two-connectivity needs at least 3 vertices, got {}", self.n)));
        }
        Ok(self.is_connected() && self.cut_vertices().is_empty())
    }

    /// Shortest cycle length by BFS from every vertex.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for w in self.adj[u].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Acyclic
        } else {
            Girth::Cycle(best)
        }
    }
}
