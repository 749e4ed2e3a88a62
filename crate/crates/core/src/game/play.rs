//! Playing out a game between two policies, for strategy checks and traces.

use serde::Serialize;

use super::{guarded, target_unchecked, Objective, SolveOutcome};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub trait CopPolicy {
    fn place(&mut self, g: &Graph) -> Result<Vec<usize>>;
    fn respond(&mut self, g: &Graph, cops: &[usize], robber: usize) -> Result<Vec<usize>>;
}

pub trait RobberPolicy {
    fn place(&mut self, g: &Graph, cops: &[usize]) -> Result<usize>;
    fn respond(&mut self, g: &Graph, cops: &[usize], robber: usize) -> Result<usize>;
}

/// Cops following a solved strategy from its best placement.
pub struct TableCops<'a>(pub &'a SolveOutcome);

impl CopPolicy for TableCops<'_> {
    fn place(&mut self, _: &Graph) -> Result<Vec<usize>> {
        self.0
            .best_initial_placement
            .clone()
            .ok_or_else(|| Error::StrategyUndefined("cops have no winning placement".into()))
    }

    fn respond(&mut self, _: &Graph, cops: &[usize], robber: usize) -> Result<Vec<usize>> {
        self.0.cop_move(cops, robber)
    }
}

/// Robber following a solved strategy.
pub struct TableRobber<'a>(pub &'a SolveOutcome);

impl RobberPolicy for TableRobber<'_> {
    fn place(&mut self, _: &Graph, cops: &[usize]) -> Result<usize> {
        self.0.robber_start(cops)
    }

    fn respond(&mut self, _: &Graph, cops: &[usize], robber: usize) -> Result<usize> {
        self.0.robber_move(cops, robber)
    }
}

/// Cops that never leave a fixed placement.
pub struct FrozenCops(pub Vec<usize>);

impl CopPolicy for FrozenCops {
    fn place(&mut self, _: &Graph) -> Result<Vec<usize>> {
        Ok(self.0.clone())
    }

    fn respond(&mut self, _: &Graph, cops: &[usize], _: usize) -> Result<Vec<usize>> {
        Ok(cops.to_vec())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Transcript {
    /// `(cops, robber)` with the robber to move, one entry per completed cop turn.
    pub positions: Vec<(Vec<usize>, usize)>,
    pub target_reached: bool,
    /// Cop turns played before the target first held.
    pub rounds: u32,
}

/// Plays until the target holds or `max_rounds` cop turns have passed.
/// Illegal moves from either policy are reported as errors.
pub fn play(
    g: &Graph,
    objective: Objective,
    cops: &mut dyn CopPolicy,
    robber: &mut dyn RobberPolicy,
    max_rounds: u32,
) -> Result<Transcript> {
    let n = g.order();
    let check = |v: usize| if v < n { Ok(()) } else { Err(Error::VertexOutOfRange { vertex: v, n }) };
    let mut c = cops.place(g)?;
    c.iter().try_for_each(|&v| check(v))?;
    let mut r = robber.place(g, &c)?;
    check(r)?;
    let mut positions = vec![(c.clone(), r)];
    let mut rounds = 0;
    loop {
        if target_unchecked(g, objective, &c, guarded(g, &c), r) {
            return Ok(Transcript { positions, target_reached: true, rounds });
        }
        if rounds == max_rounds {
            return Ok(Transcript { positions, target_reached: false, rounds });
        }
        let nr = robber.respond(g, &c, r)?;
        if !g.closed_nbrs(r).contains(nr) {
            return Err(Error::Trace(format!("robber moved from {r} to non-neighbour {nr}")));
        }
        r = nr;
        let nc = cops.respond(g, &c, r)?;
        if nc.len() != c.len() || c.iter().zip(&nc).any(|(&a, &b)| b >= n || !g.closed_nbrs(a).contains(b)) {
            return Err(Error::Trace(format!("illegal cop move {c:?} -> {nc:?}")));
        }
        c = nc;
        rounds += 1;
        positions.push((c.clone(), r));
    }
}
