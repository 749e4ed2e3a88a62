use serde::Serialize;

use super::{add_twin, is_cograph, TwinType};
use crate::error::{Error, Result};
use crate::game::{confining_cop_number, cop_number};
use crate::graph::Graph;

/// Cop and confining cop numbers of a cograph and of its two one-vertex
/// twin extensions at `anchor`.
#[derive(Debug, Clone, Serialize)]
pub struct TwinEffects {
    pub anchor: usize,
    pub c: usize,
    pub ccn: usize,
    pub c_true: usize,
    pub ccn_true: usize,
    pub c_false: usize,
    pub ccn_false: usize,
}

impl TwinEffects {
    pub fn c_invariant_under_true_twin(&self) -> bool {
        self.c_true == self.c
    }

    pub fn c_monotone_under_false_twin(&self) -> bool {
        self.c_false >= self.c
    }

    pub fn ccn_monotone_under_true_twin(&self) -> bool {
        self.ccn_true >= self.ccn
    }

    pub fn ccn_invariant_under_false_twin(&self) -> bool {
        self.ccn_false == self.ccn
    }

    pub fn all_hold(&self) -> bool {
        self.c_invariant_under_true_twin()
            && self.c_monotone_under_false_twin()
            && self.ccn_monotone_under_true_twin()
            && self.ccn_invariant_under_false_twin()
    }
}

pub fn check_twin_effects(g: &Graph, anchor: usize) -> Result<TwinEffects> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_cograph(g) {
        return Err(Error::NotCograph);
    }
    let t = add_twin(g, anchor, TwinType::True)?;
    let f = add_twin(g, anchor, TwinType::False)?;
    Ok(TwinEffects {
        anchor,
        c: cop_number(g)?,
        ccn: confining_cop_number(g)?,
        c_true: cop_number(&t)?,
        ccn_true: confining_cop_number(&t)?,
        c_false: cop_number(&f)?,
        ccn_false: confining_cop_number(&f)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_false_twin_raises_cop_number() {
        let e = check_twin_effects(&Graph::path(3).unwrap(), 1).unwrap();
        assert_eq!((e.c, e.c_false), (1, 2));
        assert!(e.all_hold());
    }

    #[test]
    fn k2_is_flat() {
        let e = check_twin_effects(&Graph::complete(2).unwrap(), 0).unwrap();
        assert_eq!([e.c, e.ccn, e.c_true, e.ccn_true, e.c_false, e.ccn_false], [1; 6]);
    }

    #[test]
    fn preconditions() {
        assert_eq!(check_twin_effects(&Graph::path(4).unwrap(), 0).unwrap_err(), Error::NotCograph);
        assert_eq!(check_twin_effects(&Graph::empty(2).unwrap(), 0).unwrap_err(), Error::Disconnected);
    }
}
