//! Twins, twin operations and cographs.

mod cotree;
mod effects;
mod enumerate;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use cotree::{cotree_code, to_cotree, Cotree, CotreeCode};
pub use effects::{check_twin_effects, TwinEffects};
pub use enumerate::{enumerate_connected_cographs, COGRAPH_MAX_N};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TwinType {
    /// `N[u] = N[v]`.
    True,
    /// `N(u) = N(v)`.
    False,
}

impl TwinType {
    pub const BOTH: [TwinType; 2] = [TwinType::True, TwinType::False];
}

impl fmt::Display for TwinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwinType::True => "true",
            TwinType::False => "false",
        })
    }
}

impl FromStr for TwinType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "true" | "t" => Ok(TwinType::True),
            "false" | "f" => Ok(TwinType::False),
            _ => Err(Error::InvalidArgument(format!("unknown twin type `{s}`"))),
        }
    }
}

fn twin_type_within(g: &Graph, s: VertexSet, u: usize, v: usize) -> Option<TwinType> {
    let (nu, nv) = (g.nbrs(u).intersection(s), g.nbrs(v).intersection(s));
    (nu.without(v) == nv.without(u)).then(|| if g.has_edge(u, v) { TwinType::True } else { TwinType::False })
}

/// Every unordered twin pair `(u, v)` with `u < v`.
pub fn find_twins(g: &Graph) -> Result<Vec<(usize, usize, TwinType)>> {
    let n = g.order();
    if n < 2 {
        return Err(Error::InvalidArgument(format!("twins need at least 2 vertices, got {n}")));
    }
    let all = g.vertices();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if let Some(t) = twin_type_within(g, all, u, v) {
                out.push((u, v, t));
            }
        }
    }
    Ok(out)
}

/// Cograph test by repeatedly deleting one vertex of a twin pair.
pub fn is_cograph(g: &Graph) -> bool {
    let mut alive = g.vertices();
    'shrink: while alive.len() > 1 {
        for u in alive.iter() {
            for v in alive.iter().filter(|&v| v > u) {
                if twin_type_within(g, alive, u, v).is_some() {
                    alive.remove(v);
                    continue 'shrink;
                }
            }
        }
        return false;
    }
    true
}

/// Adds vertex `n` as a twin of `x`.
pub fn add_twin(g: &Graph, x: usize, t: TwinType) -> Result<Graph> {
    let nbrs = g.neighborhood(x)?;
    g.add_vertex(match t {
        TwinType::True => nbrs.with(x),
        TwinType::False => nbrs,
    })
}

/// Twin operations applied to `K_2`; vertex `i + 2` is created by step `i`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinSequence {
    pub steps: Vec<(usize, TwinType)>,
}

impl TwinSequence {
    pub fn build(&self) -> Result<Graph> {
        build_from_sequence(self)
    }
}

pub fn build_from_sequence(seq: &TwinSequence) -> Result<Graph> {
    let mut g = Graph::complete(2)?;
    for &(x, t) in &seq.steps {
        g = add_twin(&g, x, t)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn twin_examples() {
        assert_eq!(find_twins(&Graph::complete(2).unwrap()).unwrap(), vec![(0, 1, TwinType::True)]);
        assert_eq!(
            find_twins(&Graph::cycle(4).unwrap()).unwrap(),
            vec![(0, 2, TwinType::False), (1, 3, TwinType::False)]
        );
        assert!(find_twins(&Graph::path(4).unwrap()).unwrap().is_empty());
        assert!(find_twins(&Graph::complete(1).unwrap()).is_err());
    }

    #[test]
    fn recognition() {
        assert!(!is_cograph(&Graph::path(4).unwrap()));
        assert!(is_cograph(&Graph::cycle(4).unwrap()));
        assert!(is_cograph(&Graph::complete(4).unwrap()));
        assert!(is_cograph(&named::paw()));
        assert!(!is_cograph(&Graph::cycle(5).unwrap()));
        assert!(is_cograph(&Graph::empty(3).unwrap()));
    }

    #[test]
    fn twin_operations() {
        let p3 = Graph::path(3).unwrap();
        let c4 = add_twin(&p3, 1, TwinType::False).unwrap();
        assert_eq!(c4.degree(3), 2);
        assert!(c4.induces_cycle(c4.vertices()));
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(add_twin(&k2, 0, TwinType::True).unwrap(), Graph::complete(3).unwrap());
        let p3b = add_twin(&k2, 0, TwinType::False).unwrap();
        assert_eq!(p3b.degree(1), 2);
        assert!(add_twin(&k2, 2, TwinType::True).is_err());
    }

    #[test]
    fn sequences() {
        let k3 = build_from_sequence(&TwinSequence { steps: vec![(0, TwinType::True)] }).unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
        let g = build_from_sequence(&TwinSequence { steps: vec![(0, TwinType::False), (1, TwinType::False)] }).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_pk_free(4).unwrap());
        assert!(build_from_sequence(&TwinSequence { steps: vec![(5, TwinType::True)] }).is_err());
    }
}
