//! Train-chasing: a column of cops walks from `v1` towards the robber along
//! shortest paths, leaving one cop behind per step and pruning the side
//! neighbourhoods of the path from the robber's territory.

mod lemma;
mod trap;

use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{RobberPolicy, SolveOutcome};
use crate::graph::{Graph, VertexSet};

pub use lemma::{verify_lemma, Conclusion, LemmaReport};
pub use trap::{trap_procedure, TrapReport};

/// Next hop from `u` on a shortest `u`-`v` path inside `h`, lowest index first.
/// Adjacent `u`, `v` give `v`.
pub fn theta(g: &Graph, u: usize, v: usize, h: VertexSet) -> Result<usize> {
    let n = g.order();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
        if !h.contains(x) {
            return Err(Error::InvalidArgument(format!("vertex {x} is outside the chase subgraph")));
        }
    }
    if u == v {
        return Err(Error::InvalidArgument("chasing function needs distinct endpoints".into()));
    }
    let dist = g.bfs_layers_within(v, h);
    let du =
        dist[u].ok_or_else(|| Error::InvalidArgument(format!("vertices {u} and {v} lie in different components")))?;
    Ok(g.nbrs(u)
        .intersection(h)
        .iter()
        .find(|&x| dist[x] == Some(du - 1))
        .expect("a shortest path leaves u through a neighbour"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChaseOutcome {
    /// All steps ran without the robber being caught.
    Completed,
    /// The robber stood in a cop's closed neighbourhood at the cop turn of `step`.
    RobberCaught { step: usize },
}

/// Record of one train chase. Index `i` in every list is step `i + 1`.
#[derive(Debug, Clone, Serialize)]
pub struct ChaseTrace {
    /// Step budget, equal to the number of cops.
    pub k: usize,
    /// `v1 ..= v_{s+1}` for `s` completed steps.
    pub v: Vec<usize>,
    /// `H_1 ..= H_{s+1}`.
    pub h: Vec<VertexSet>,
    /// `X_1 ..= X_s`.
    pub x: Vec<VertexSet>,
    /// Robber position at each cop turn, `w_1 ..= w_{s+1}`; the last entry is
    /// the reply to the final cop move (or the capture vertex).
    pub w: Vec<usize>,
    /// Cop positions, indexed by cop, at placement and after each cop turn.
    pub cops: Vec<Vec<usize>>,
    pub outcome: ChaseOutcome,
}

impl ChaseTrace {
    pub fn steps(&self) -> usize {
        self.x.len()
    }

    /// Vertex-list form for JSON dumps.
    pub fn to_json(&self) -> serde_json::Value {
        let sets = |s: &[VertexSet]| s.iter().map(|x| x.to_vec()).collect::<Vec<_>>();
        serde_json::json!({
            "k": self.k,
            "v": self.v,
            "h": sets(&self.h),
            "x": sets(&self.x),
            "w": self.w,
            "cops": self.cops,
            "outcome": self.outcome,
        })
    }
}

/// Runs the train chase with `k` cops starting on `v1` for up to `k` steps.
///
/// In step `i` cops `C_1 .. C_{i-1}` hold `v_1 .. v_{i-1}` and the rest stand
/// on `v_i`; `C_i` stays while the others advance to
/// `v_{i+1} = θ(v_i, w_i, H_i)`. The pruned set is
/// `X_i = N_{H_i}(v_i) \ {v_{i-1}, v_{i+1}}`: keeping `v_{i-1}` is what keeps
/// `v_1` inside `H_{i+1}`.
pub fn train_chase(g: &Graph, v1: usize, k: usize, robber: &mut dyn RobberPolicy) -> Result<ChaseTrace> {
    let n = g.order();
    if v1 >= n {
        return Err(Error::VertexOutOfRange { vertex: v1, n });
    }
    if k == 0 {
        return Err(Error::InvalidArgument("train chase needs at least one cop".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut pos = vec![v1; k];
    let mut trace = ChaseTrace {
        k,
        v: vec![v1],
        h: vec![g.vertices()],
        x: Vec::new(),
        w: Vec::new(),
        cops: vec![pos.clone()],
        outcome: ChaseOutcome::Completed,
    };
    let mut w = robber.place(g, &pos)?;
    check_robber(n, w)?;
    for i in 1..=k {
        trace.w.push(w);
        let guard = pos.iter().fold(VertexSet::EMPTY, |acc, &c| acc.union(g.closed_nbrs(c)));
        if guard.contains(w) {
            trace.outcome = ChaseOutcome::RobberCaught { step: i };
            return Ok(trace);
        }
        let (vi, hi) = (trace.v[i - 1], trace.h[i - 1]);
        if !hi.contains(w) {
            return Err(Error::Trace(format!("unguarded robber at {w} left H_{i}")));
        }
        let next = theta(g, vi, w, hi)?;
        let mut xi = g.nbrs(vi).intersection(hi).without(next);
        if i >= 2 {
            xi.remove(trace.v[i - 2]);
        }
        let h_next = g.component_within(v1, hi.difference(xi));
        for c in pos.iter_mut().skip(i) {
            *c = next;
        }
        trace.v.push(next);
        trace.x.push(xi);
        trace.h.push(h_next);
        trace.cops.push(pos.clone());
        let reply = robber.respond(g, &pos, w)?;
        if !g.closed_nbrs(w).contains(reply) {
            return Err(Error::Trace(format!("robber moved from {w} to non-neighbour {reply}")));
        }
        w = reply;
    }
    trace.w.push(w);
    Ok(trace)
}

fn check_robber(n: usize, w: usize) -> Result<()> {
    if w >= n {
        return Err(Error::VertexOutOfRange { vertex: w, n });
    }
    Ok(())
}

/// Robber driven by a solved game. It starts where the cops' first move
/// leaves it best off, since in a chase the cops move right after placement.
pub struct SolverEvader<'a>(pub &'a SolveOutcome);

impl RobberPolicy for SolverEvader<'_> {
    fn place(&mut self, g: &Graph, cops: &[usize]) -> Result<usize> {
        let guard = guard_of(g, cops);
        let mut best: Option<((u32, bool), usize)> = None;
        for r in 0..g.order() {
            match self.0.rounds_cops_to_move(cops, r)? {
                None => return Ok(r),
                Some(x) => {
                    let key = (x, !guard.contains(r));
                    if best.is_none_or(|(b, _)| key > b) {
                        best = Some((key, r));
                    }
                }
            }
        }
        Ok(best.map_or(0, |(_, r)| r))
    }

    fn respond(&mut self, _: &Graph, cops: &[usize], robber: usize) -> Result<usize> {
        self.0.robber_move(cops, robber)
    }
}

/// Seeded robber choosing uniformly among moves that avoid the cops'
/// neighbourhoods, staying put when there are none.
pub struct RandomEvader {
    rng: ChaCha8Rng,
}

impl RandomEvader {
    pub fn new(seed: u64) -> RandomEvader {
        RandomEvader { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn pick(&mut self, options: VertexSet, fallback: usize) -> usize {
        options.iter().choose(&mut self.rng).unwrap_or(fallback)
    }
}

fn guard_of(g: &Graph, cops: &[usize]) -> VertexSet {
    cops.iter().fold(VertexSet::EMPTY, |acc, &c| acc.union(g.closed_nbrs(c)))
}

impl RobberPolicy for RandomEvader {
    fn place(&mut self, g: &Graph, cops: &[usize]) -> Result<usize> {
        let free = g.vertices().difference(guard_of(g, cops));
        Ok(self.pick(free, 0))
    }

    fn respond(&mut self, g: &Graph, cops: &[usize], robber: usize) -> Result<usize> {
        let safe = g.closed_nbrs(robber).difference(guard_of(g, cops));
        Ok(self.pick(safe, robber))
    }
}
