//! Brute-force oracles and ingested reference data. Nothing here calls the
//! library's own algorithms beyond graph construction and adjacency queries.
#![allow(dead_code)]

use std::collections::BTreeSet;

use crgames::graph::parse_graph6_lines;
use crgames::Graph;

pub const ATLAS: &str = include_str!("../data/atlas_upto7.g6");
pub const ATLAS_FLAGS: &str = include_str!("../data/atlas_upto7_flags.csv");
pub const COGRAPHS_8: &str = include_str!("../data/connected_cographs_8.g6");

#[derive(Debug, Clone)]
pub struct AtlasRow {
    pub graph: Graph,
    pub graph6: String,
    pub n: usize,
    pub connected: bool,
    pub planar: bool,
}

/// Every graph on 1 to 7 vertices up to isomorphism, with reference flags.
pub fn atlas() -> Vec<AtlasRow> {
    let mut rows = Vec::new();
    for line in ATLAS_FLAGS.lines().skip(1) {
        let f: Vec<&str> = line.rsplitn(4, ',').collect();
        let (planar, connected, n, g6) = (f[0] == "1", f[1] == "1", f[2].parse().unwrap(), f[3]);
        let graph = parse_graph6_lines(g6).unwrap().remove(0);
        rows.push(AtlasRow { graph, graph6: g6.to_string(), n, connected, planar });
    }
    rows
}

pub fn cographs_8() -> Vec<Graph> {
    parse_graph6_lines(COGRAPHS_8).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return false;
    }
    permutations(n).iter().any(|p| (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(p[u], p[v]))))
}

/// Ordered vertex sequences inducing a path on `k` vertices.
pub fn has_induced_path(g: &Graph, k: usize) -> bool {
    fn rec(g: &Graph, seq: &mut Vec<usize>, k: usize) -> bool {
        if seq.len() == k {
            return true;
        }
        let last = *seq.last().unwrap();
        for v in 0..g.order() {
            if seq.contains(&v) || !g.has_edge(last, v) {
                continue;
            }
            if seq[..seq.len() - 1].iter().any(|&u| g.has_edge(u, v)) {
                continue;
            }
            seq.push(v);
            if rec(g, seq, k) {
                return true;
            }
            seq.pop();
        }
        false
    }
    if k == 0 {
        return true;
    }
    (0..g.order()).any(|v| rec(g, &mut vec![v], k))
}

/// Length of a shortest cycle by exhaustive simple-path search, `None` if acyclic.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    fn rec(g: &Graph, start: usize, seq: &mut Vec<usize>, best: &mut Option<usize>) {
        let last = *seq.last().unwrap();
        if seq.len() >= 3 && g.has_edge(last, start) {
            *best = Some(best.map_or(seq.len(), |b| b.min(seq.len())));
        }
        if best.is_some_and(|b| seq.len() >= b) {
            return;
        }
        for v in start + 1..g.order() {
            if !seq.contains(&v) && g.has_edge(last, v) {
                seq.push(v);
                rec(g, start, seq, best);
                seq.pop();
            }
        }
    }
    for s in 0..n {
        rec(g, s, &mut vec![s], &mut best);
    }
    best
}

/// Whether `v` lies on an induced cycle of length `len`.
pub fn on_induced_cycle(g: &Graph, v: usize, len: usize) -> bool {
    fn rec(g: &Graph, seq: &mut Vec<usize>, len: usize) -> bool {
        if seq.len() == len {
            let (first, last) = (seq[0], *seq.last().unwrap());
            if !g.has_edge(first, last) {
                return false;
            }
            return (0..len).all(|i| {
                (i + 1..len).all(|j| {
                    let adjacent = j == i + 1 || (i == 0 && j == len - 1);
                    g.has_edge(seq[i], seq[j]) == adjacent
                })
            });
        }
        let last = *seq.last().unwrap();
        for u in 0..g.order() {
            if !seq.contains(&u) && g.has_edge(last, u) {
                seq.push(u);
                if rec(g, seq, len) {
                    return true;
                }
                seq.pop();
            }
        }
        false
    }
    rec(g, &mut vec![v], len)
}

/// One-cop capture game solved by naive fixpoint iteration over
/// `(cop, robber)` positions with the cop to move.
pub fn one_cop_wins(g: &Graph) -> bool {
    let n = g.order();
    let closed = |v: usize| -> Vec<usize> { (0..n).filter(|&u| u == v || g.has_edge(u, v)).collect() };
    // win[c][r]: cop to move at c, robber at r, cop forces capture.
    let mut win = vec![vec![false; n]; n];
    loop {
        let mut changed = false;
        for c in 0..n {
            for r in 0..n {
                if win[c][r] {
                    continue;
                }
                let w =
                    closed(c).into_iter().any(|c2| c2 == r || closed(r).into_iter().all(|r2| r2 == c2 || win[c2][r2]));
                if w {
                    win[c][r] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    // The robber places after the cop, then the cop moves.
    (0..n).any(|c| (0..n).all(|r| r == c || win[c][r]))
}

/// Naive planarity: a graph on at most 8 vertices is planar iff it has no
/// K5 or K3,3 minor; minors are searched by deleting and contracting edges.
pub fn has_k5_or_k33_minor(g: &Graph) -> bool {
    fn edges_of(n: usize, adj: &[u32]) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for (u, &row) in adj.iter().enumerate().take(n) {
            for v in u + 1..n {
                if row >> v & 1 == 1 {
                    e.push((u, v));
                }
            }
        }
        e
    }
    fn is_target(n: usize, adj: &[u32]) -> bool {
        let m = edges_of(n, adj).len();
        if n == 5 && m == 10 {
            return true;
        }
        if n == 6 && m == 9 && (0..n).all(|v| adj[v].count_ones() == 3) {
            // Bipartite 3-regular on 6 vertices is K3,3.
            let mut colour = [None; 6];
            colour[0] = Some(0);
            let mut stack = vec![0];
            while let Some(u) = stack.pop() {
                for v in 0..n {
                    if adj[u] >> v & 1 == 1 {
                        match colour[v] {
                            None => {
                                colour[v] = Some(1 - colour[u].unwrap());
                                stack.push(v);
                            }
                            Some(c) if Some(c) == colour[u] => return false,
                            _ => {}
                        }
                    }
                }
            }
            return colour.iter().all(|c| c.is_some());
        }
        false
    }
    fn contract(n: usize, adj: &[u32], u: usize, v: usize) -> (usize, Vec<u32>) {
        // Merge v into u, then relabel so vertex v disappears.
        let mut a = adj.to_vec();
        a[u] |= a[v];
        for row in a.iter_mut().take(n) {
            if *row >> v & 1 == 1 {
                *row |= 1 << u;
            }
        }
        a[u] &= !(1 << u);
        let keep: Vec<usize> = (0..n).filter(|&w| w != v).collect();
        let out = keep
            .iter()
            .map(|&w| {
                keep.iter().enumerate().filter(|&(_, &x)| x != w && a[w] >> x & 1 == 1).fold(0, |m, (i, _)| m | 1 << i)
            })
            .collect();
        (n - 1, out)
    }
    fn rec(n: usize, adj: Vec<u32>, seen: &mut std::collections::HashSet<Vec<u32>>) -> bool {
        if n < 5 || !seen.insert(adj.clone()) {
            return false;
        }
        let m = edges_of(n, &adj).len();
        if m < 9 {
            return false;
        }
        if is_target(n, &adj) {
            return true;
        }
        // Isolated vertices never help.
        if let Some(v) = (0..n).find(|&v| adj[v] == 0) {
            let keep: Vec<usize> = (0..n).filter(|&w| w != v).collect();
            let a = keep
                .iter()
                .map(|&w| {
                    keep.iter().enumerate().filter(|&(_, &x)| adj[w] >> x & 1 == 1).fold(0, |m, (i, _)| m | 1 << i)
                })
                .collect();
            return rec(n - 1, a, seen);
        }
        for (u, v) in edges_of(n, &adj) {
            let mut del = adj.clone();
            del[u] &= !(1 << v);
            del[v] &= !(1 << u);
            if rec(n, del, seen) {
                return true;
            }
            let (n2, con) = contract(n, &adj, u, v);
            if rec(n2, con, seen) {
                return true;
            }
        }
        false
    }
    let n = g.order();
    let adj: Vec<u32> = (0..n).map(|u| (0..n).filter(|&v| g.has_edge(u, v)).fold(0, |m, v| m | 1 << v)).collect();
    rec(n, adj, &mut std::collections::HashSet::new())
}

pub fn codes<T: Ord>(items: impl IntoIterator<Item = T>) -> BTreeSet<T> {
    items.into_iter().collect()
}
