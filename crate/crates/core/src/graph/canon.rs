use serde::{Deserialize, Serialize};

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest order accepted by the permutation-search canonizer.
pub const CANON_MAX_N: usize = 10;

/// Isomorphism-class code: equal iff the graphs are isomorphic.
///
/// Layout: the order as one byte followed by the column-major upper-triangle
/// adjacency bits of the canonical relabeling, packed big-endian.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode(pub Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Canonical code by maximising the adjacency encoding over relabelings that
/// respect a colour-refined degree partition.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    Ok(canonical_form(g)?.0)
}

/// Canonical code together with the canonically relabeled graph.
pub fn canonical_form(g: &Graph) -> Result<(CanonicalCode, Graph)> {
    let n = g.order();
    if n > CANON_MAX_N {
        return Err(Error::OrderLimit { what: "generic canonical labeling", n, limit: CANON_MAX_N });
    }
    let colors = refine_colors(g);
    let mut classes: Vec<(usize, VertexSet)> = Vec::new();
    for (v, &colour) in colors.iter().enumerate() {
        match classes.iter_mut().find(|(c, _)| *c == colour) {
            Some((_, s)) => s.insert(v),
            None => classes.push((colour, VertexSet::singleton(v))),
        }
    }
    classes.sort_by_key(|&(c, _)| c);
    let slot_class: Vec<VertexSet> = classes.iter().flat_map(|&(_, s)| std::iter::repeat_n(s, s.len())).collect();

    let mut search = Search { g, slot_class: &slot_class, order: Vec::with_capacity(n), best: None };
    search.run(0, 0, VertexSet::EMPTY, false);
    let (bits, order) = search.best.expect("at least one labeling");

    let nbits = n * n.saturating_sub(1) / 2;
    let mut bytes = vec![n as u8];
    for chunk in 0..nbits.div_ceil(8) {
        bytes.push((bits >> (56 - 8 * chunk)) as u8);
    }
    let mut perm = vec![0; n];
    for (slot, &v) in order.iter().enumerate() {
        perm[v] = slot;
    }
    Ok((CanonicalCode(bytes), g.permute(&perm)?))
}

/// Stable colour refinement with canonically ordered colours.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.nbrs(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        // Descending so high-degree vertices take the first slots.
        let next: Vec<usize> =
            sigs.iter().map(|s| distinct.len() - 1 - distinct.binary_search(s).expect("present")).collect();
        if distinct.len() == classes {
            return next;
        }
        classes = distinct.len();
        colors = next;
    }
}

struct Search<'a> {
    g: &'a Graph,
    slot_class: &'a [VertexSet],
    order: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    /// `bits` holds the code so far from the most significant end; `used` is
    /// its length. `ahead` records that the prefix already beats `best`.
    fn run(&mut self, bits: u64, used: usize, placed: VertexSet, ahead: bool) {
        let slot = self.order.len();
        if slot == self.slot_class.len() {
            if self.best.as_ref().is_none_or(|(b, _)| bits > *b) {
                self.best = Some((bits, self.order.clone()));
            }
            return;
        }
        for v in self.slot_class[slot].difference(placed).iter() {
            let mut next = bits;
            for (i, &u) in self.order.iter().enumerate() {
                if self.g.has_edge(u, v) {
                    next |= 1u64 << (63 - (used + i));
                }
            }
            let used_next = used + slot;
            let mut ahead_next = ahead;
            if !ahead {
                if let Some((best, _)) = &self.best {
                    let mask = if used_next == 0 { 0 } else { !0u64 << (64 - used_next) };
                    let (mine, theirs) = (next & mask, best & mask);
                    if mine < theirs {
                        continue;
                    }
                    ahead_next = mine > theirs;
                }
            }
            self.order.push(v);
            self.run(next, used_next, placed.with(v), ahead_next);
            self.order.pop();
        }
    }
}
