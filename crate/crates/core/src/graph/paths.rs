use super::{Graph, VertexSet};
use crate::error::{Error, Result};

impl Graph {
    /// An induced path on `k` vertices, if one exists.
    pub fn find_induced_path(&self, k: usize) -> Result<Option<Vec<usize>>> {
        if k < 2 {
            return Err(Error::InvalidArgument(format!("induced path length must be >= 2, got {k}")));
        }
        if k > self.n {
            return Ok(None);
        }
        let mut path = Vec::with_capacity(k);
        for start in 0..self.n {
            path.push(start);
            if self.extend_induced_path(&mut path, VertexSet::singleton(start), k) {
                return Ok(Some(path));
            }
            path.pop();
        }
        Ok(None)
    }

    /// `blocked` holds the path plus every neighbour of a non-final path vertex.
    fn extend_induced_path(&self, path: &mut Vec<usize>, blocked: VertexSet, k: usize) -> bool {
        if path.len() == k {
            return true;
        }
        let last = *path.last().expect("non-empty path");
        let next_blocked = blocked.union(self.closed_nbrs(last));
        for x in self.adj[last].difference(blocked).iter() {
            path.push(x);
            if self.extend_induced_path(path, next_blocked, k) {
                return true;
            }
            path.pop();
        }
        false
    }

    pub fn is_pk_free(&self, k: usize) -> Result<bool> {
        Ok(self.find_induced_path(k)?.is_none())
    }

    /// Whether some induced cycle on exactly `len` vertices passes through `v`.
    pub fn has_induced_cycle_through(&self, v: usize, len: usize) -> Result<bool> {
        self.check_vertex(v)?;
        if len < 3 {
            return Err(Error::InvalidArgument(format!("cycle length must be >= 3, got {len}")));
        }
        Ok(self.find_induced_cycle_through(v, len).is_some())
    }

    /// Vertices `v = p0, p1, .., p_{len-1}` of an induced cycle through `v`.
    pub fn find_induced_cycle_through(&self, v: usize, len: usize) -> Option<Vec<usize>> {
        if len < 3 || len > self.n {
            return None;
        }
        let mut path = vec![v];
        for p1 in self.adj[v].iter() {
            path.push(p1);
            if self.close_cycle(&mut path, self.closed_nbrs(v), len) {
                return Some(path);
            }
            path.pop();
        }
        None
    }

    /// `blocked` is the union of `N[p_j]` for every `j` up to `len(path) - 2`.
    fn close_cycle(&self, path: &mut Vec<usize>, blocked: VertexSet, len: usize) -> bool {
        let i = path.len();
        let v = path[0];
        let last = path[i - 1];
        if i == len - 1 {
            let inner = path[1..i - 1].iter().fold(VertexSet::EMPTY, |acc, &p| acc.union(self.closed_nbrs(p)));
            let closing = self.adj[last].intersection(self.adj[v]).difference(inner).without(v);
            if let Some(x) = closing.first() {
                path.push(x);
                return true;
            }
            return false;
        }
        let next_blocked = blocked.union(self.closed_nbrs(last));
        for x in self.adj[last].difference(blocked).iter() {
            path.push(x);
            if self.close_cycle(path, next_blocked, len) {
                return true;
            }
            path.pop();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    /// Exhaustive check over all `k`-subsets and orderings; only for small graphs.
    fn naive_has_induced_path(g: &Graph, k: usize) -> bool {
        fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for v in start..n {
                cur.push(v);
                subsets(n, k, v + 1, cur, out);
                cur.pop();
            }
        }
        let mut all = Vec::new();
        subsets(g.order(), k, 0, &mut Vec::new(), &mut all);
        all.into_iter().any(|s| {
            let set: VertexSet = s.iter().copied().collect();
            // A set induces a path iff it is connected, acyclic and has max degree <= 2.
            let degs: Vec<usize> = s.iter().map(|&v| g.nbrs(v).intersection(set).len()).collect();
            let edges: usize = degs.iter().sum::<usize>() / 2;
            g.is_connected_within(set) && edges + 1 == k && degs.iter().all(|&d| d <= 2)
        })
    }

    #[test]
    fn pk_free_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(c4.is_pk_free(4).unwrap());
        let p4 = Graph::path(4).unwrap();
        assert!(!p4.is_pk_free(4).unwrap());
        assert_eq!(p4.find_induced_path(4).unwrap(), Some(vec![0, 1, 2, 3]));
        assert!(named::paw().is_pk_free(4).unwrap());
        assert!(c4.is_pk_free(1).is_err());
        assert!(Graph::cycle(5).unwrap().is_pk_free(5).unwrap());
        assert!(!Graph::cycle(6).unwrap().is_pk_free(5).unwrap());
    }

    #[test]
    fn naive_matches_on_examples() {
        for g in [Graph::cycle(6).unwrap(), named::paw(), named::petersen()] {
            for k in 2..=6 {
                assert_eq!(naive_has_induced_path(&g, k), !g.is_pk_free(k).unwrap());
            }
        }
    }

    #[test]
    fn induced_cycles() {
        let c5 = Graph::cycle(5).unwrap();
        for v in 0..5 {
            assert!(c5.has_induced_cycle_through(v, 5).unwrap());
            assert!(!c5.has_induced_cycle_through(v, 4).unwrap());
        }
        let k4 = Graph::complete(4).unwrap();
        for v in 0..4 {
            assert!(!k4.has_induced_cycle_through(v, 4).unwrap());
            assert!(k4.has_induced_cycle_through(v, 3).unwrap());
        }
        assert!(k4.has_induced_cycle_through(0, 2).is_err());
        let pet = named::petersen();
        assert!(pet.has_induced_cycle_through(0, 5).unwrap());
        assert!(pet.has_induced_cycle_through(0, 6).unwrap());
        assert!(!pet.has_induced_cycle_through(0, 4).unwrap());
        assert!(!pet.has_induced_cycle_through(0, 3).unwrap());
    }
}
