use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{add_twin, cotree_code, TwinType};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order for twin-expansion enumeration.
pub const COGRAPH_MAX_N: usize = 10;

/// One connected cograph per isomorphism class on `n` vertices, sorted by
/// cotree code. Built level by level from `K_2`: deleting one vertex of a
/// twin pair keeps a connected cograph connected, so every class on `n + 1`
/// vertices extends some class on `n`.
pub fn enumerate_connected_cographs(n: usize) -> Result<Vec<Graph>> {
    if n > COGRAPH_MAX_N {
        return Err(Error::OrderLimit { what: "cograph enumeration", n, limit: COGRAPH_MAX_N });
    }
    match n {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![Graph::complete(1)?]),
        _ => {}
    }
    let mut level = vec![Graph::complete(2)?];
    for _ in 2..n {
        let children: Vec<Vec<(super::CotreeCode, Graph)>> = level
            .par_iter()
            .map(|g| {
                let mut out = Vec::with_capacity(2 * g.order());
                for x in 0..g.order() {
                    for t in TwinType::BOTH {
                        let h = add_twin(g, x, t)?;
                        out.push((cotree_code(&h)?, h));
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        let mut classes = BTreeMap::new();
        for (code, h) in children.into_iter().flatten() {
            classes.entry(code).or_insert(h);
        }
        level = classes.into_values().collect();
    }
    Ok(level)
}
