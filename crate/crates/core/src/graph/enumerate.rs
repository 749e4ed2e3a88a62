use std::collections::BTreeMap;

use super::canon::canonical_form;
use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest order the internal generator sweeps; larger corpora come from graph6 files.
pub const ENUMERATE_MAX_N: usize = 6;

/// One representative per isomorphism class of graphs on `n` vertices, in
/// canonical-code order. Representatives are in canonical labeling.
pub fn enumerate_all_graphs(n: usize) -> Result<Vec<Graph>> {
    sweep(n, false)
}

/// As [`enumerate_all_graphs`] restricted to connected graphs.
pub fn enumerate_all_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    sweep(n, true)
}

fn sweep(n: usize, connected: bool) -> Result<Vec<Graph>> {
    if n > ENUMERATE_MAX_N {
        return Err(Error::OrderLimit {
            what: "internal enumeration (ingest larger corpora as graph6)",
            n,
            limit: ENUMERATE_MAX_N,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut classes = BTreeMap::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let mut adj = vec![VertexSet::EMPTY; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << b) != 0 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
        let g = Graph::from_adjacency_unchecked(adj);
        if connected && !g.is_connected() {
            continue;
        }
        let (code, form) = canonical_form(&g)?;
        classes.entry(code).or_insert(form);
    }
    Ok(classes.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_all_connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
        assert_eq!(enumerate_all_graphs(4).unwrap().len(), 11);
        assert!(enumerate_all_graphs(7).is_err());
    }

    #[test]
    fn n3_is_p3_and_k3() {
        let gs = enumerate_all_connected_graphs(3).unwrap();
        let mut sizes: Vec<usize> = gs.iter().map(Graph::size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 3]);
    }
}
