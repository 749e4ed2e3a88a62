use serde::Serialize;

use super::{train_chase, ChaseOutcome, ChaseTrace, SolverEvader};
use crate::error::{Error, Result};
use crate::game::{solve, trap_witness, GameConfig, Objective, Variant};
use crate::graph::Graph;

#[derive(Debug, Clone, Serialize)]
pub struct TrapReport {
    pub k: usize,
    pub cops: usize,
    pub v1: usize,
    /// First round at which the robber is trapped or caught: 0 is the
    /// placement, `i` the arrangement after cop turn `i`.
    pub rounds: Option<u32>,
    /// Vertex whose closed neighbourhood holds the robber's region; absent on capture.
    pub witness: Option<usize>,
    pub captured: bool,
    #[serde(skip)]
    pub trace: ChaseTrace,
}

impl TrapReport {
    pub fn trapped(&self) -> bool {
        self.rounds.is_some()
    }
}

/// Train chase with `k - 3` cops from `v1` on a `P_k`-free graph, against a
/// robber that plays the solved anti-trap strategy.
pub fn trap_procedure(g: &Graph, k: usize, v1: usize) -> Result<TrapReport> {
    if k < 4 {
        return Err(Error::InvalidArgument(format!("trap procedure needs k >= 4, got {k}")));
    }
    if !g.is_pk_free(k)? {
        return Err(Error::InvalidArgument(format!("graph contains an induced P{k}")));
    }
    let cops = k - 3;
    let game = solve(g, GameConfig::new(cops, Objective::Trap, Variant::AllActive)?)?;
    let trace = train_chase(g, v1, cops, &mut SolverEvader(&game))?;
    let mut report = TrapReport { k, cops, v1, rounds: None, witness: None, captured: false, trace: trace.clone() };

    // Round 0 pairs the placement with w_1; round i pairs the cops after
    // turn i with w_i, where the robber stood during that turn.
    for round in 0..trace.cops.len() {
        let robber = trace.w[round.saturating_sub(1)];
        if let Some(v) = trap_witness(g, &trace.cops[round], robber)? {
            report.rounds = Some(round as u32);
            report.witness = Some(v);
            return Ok(report);
        }
    }
    if let ChaseOutcome::RobberCaught { step } = trace.outcome {
        report.rounds = Some(step as u32);
        report.captured = true;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn cographs_are_trapped_at_placement() {
        for g in [Graph::cycle(4).unwrap(), named::paw(), Graph::complete_bipartite(2, 3).unwrap()] {
            for v1 in 0..g.order() {
                let r = trap_procedure(&g, 4, v1).unwrap();
                assert!(r.trapped());
                assert!(r.rounds.unwrap() <= 1);
            }
        }
    }

    #[test]
    fn c5_with_two_cops() {
        let c5 = Graph::cycle(5).unwrap();
        let r = trap_procedure(&c5, 5, 0).unwrap();
        assert!(r.trapped());
        assert!(r.rounds.unwrap() <= 2);
    }

    #[test]
    fn rejects_graphs_with_the_path() {
        assert!(trap_procedure(&Graph::path(4).unwrap(), 4, 0).is_err());
        assert!(trap_procedure(&Graph::cycle(4).unwrap(), 3, 0).is_err());
    }
}
