use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Union/join decomposition. Children of a union are connected and children
/// of a join have connected complements, so labels alternate down the tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

/// Isomorphism code of a cograph: equal iff the cotrees are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CotreeCode(pub String);

impl fmt::Display for CotreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn to_cotree(g: &Graph) -> Result<Cotree> {
    if g.order() == 0 {
        return Err(Error::InvalidArgument("empty graph has no cotree".into()));
    }
    build(g, &g.complement(), g.vertices())
}

fn build(g: &Graph, co: &Graph, s: VertexSet) -> Result<Cotree> {
    if s.len() == 1 {
        return Ok(Cotree::Leaf(s.first().expect("non-empty")));
    }
    let parts = split(g, s);
    if parts.len() > 1 {
        return Ok(Cotree::Union(parts.into_iter().map(|p| build(g, co, p)).collect::<Result<_>>()?));
    }
    let parts = split(co, s);
    if parts.len() > 1 {
        return Ok(Cotree::Join(parts.into_iter().map(|p| build(g, co, p)).collect::<Result<_>>()?));
    }
    Err(Error::NotCograph)
}

fn split(g: &Graph, mut s: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    while let Some(v) = s.first() {
        let c = g.component_within(v, s);
        s = s.difference(c);
        out.push(c);
    }
    out
}

impl Cotree {
    pub fn leaves(&self) -> Vec<usize> {
        match self {
            Cotree::Leaf(v) => vec![*v],
            Cotree::Union(c) | Cotree::Join(c) => c.iter().flat_map(Cotree::leaves).collect(),
        }
    }

    /// Sorted serialization forgetting vertex labels.
    pub fn code(&self) -> CotreeCode {
        fn go(t: &Cotree) -> String {
            let (tag, children) = match t {
                Cotree::Leaf(_) => return "v".into(),
                Cotree::Union(c) => ('U', c),
                Cotree::Join(c) => ('J', c),
            };
            let mut parts: Vec<String> = children.iter().map(go).collect();
            parts.sort();
            format!("{tag}({})", parts.join(","))
        }
        CotreeCode(go(self))
    }
}

/// Nested parentheses with children ordered by their smallest vertex.
impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, children) = match self {
            Cotree::Leaf(v) => return write!(f, "{v}"),
            Cotree::Union(c) => ("U", c),
            Cotree::Join(c) => ("J", c),
        };
        let mut sorted: Vec<&Cotree> = children.iter().collect();
        sorted.sort_by_key(|c| c.leaves().into_iter().min());
        write!(f, "{tag}(")?;
        for (i, c) in sorted.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

pub fn cotree_code(g: &Graph) -> Result<CotreeCode> {
    Ok(to_cotree(g)?.code())
}
