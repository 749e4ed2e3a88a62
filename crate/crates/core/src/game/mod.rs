//! The cops-and-robber game under capture, trap and confine objectives.
//!
//! Trap and confine are read against stationary cops: the robber's region is
//! the component of its vertex in the graph minus every cop's closed
//! neighbourhood. A state where the robber has no safe move counts as won for
//! every objective.

mod dismantle;
mod play;
mod solver;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use dismantle::is_dismantlable;
pub use play::{play, CopPolicy, FrozenCops, RobberPolicy, TableCops, TableRobber, Transcript};
pub use solver::{
    confining_cop_number, cop_number, game_number, solve, trapping_cop_number, OutcomeSummary, Placements,
    SolveOutcome, STATE_GUARD,
};

/// Largest number of cops the solver accepts.
pub const MAX_COPS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Capture,
    Trap,
    Confine,
}

impl Objective {
    pub const ALL: [Objective; 3] = [Objective::Capture, Objective::Trap, Objective::Confine];
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::Capture => "capture",
            Objective::Trap => "trap",
            Objective::Confine => "confine",
        })
    }
}

impl FromStr for Objective {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "capture" => Ok(Objective::Capture),
            "trap" => Ok(Objective::Trap),
            "confine" => Ok(Objective::Confine),
            _ => Err(Error::InvalidArgument(format!("unknown objective `{s}`"))),
        }
    }
}

/// Which cops may move on a cop turn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    AllActive,
    /// At most one cop changes vertex per cop turn.
    OneActive,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::AllActive => "all-active",
            Variant::OneActive => "one-active",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all-active" | "all" => Ok(Variant::AllActive),
            "one-active" | "one" => Ok(Variant::OneActive),
            _ => Err(Error::InvalidArgument(format!("unknown variant `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GameConfig {
    pub cops: usize,
    pub objective: Objective,
    pub variant: Variant,
}

impl GameConfig {
    pub fn new(cops: usize, objective: Objective, variant: Variant) -> Result<GameConfig> {
        if cops == 0 {
            return Err(Error::InvalidArgument("at least one cop is required".into()));
        }
        if cops > MAX_COPS {
            return Err(Error::TooManyCops(cops));
        }
        Ok(GameConfig { cops, objective, variant })
    }

    pub fn capture(cops: usize) -> Result<GameConfig> {
        GameConfig::new(cops, Objective::Capture, Variant::AllActive)
    }

    pub fn confine(cops: usize) -> Result<GameConfig> {
        GameConfig::new(cops, Objective::Confine, Variant::AllActive)
    }

    pub fn trap(cops: usize) -> Result<GameConfig> {
        GameConfig::new(cops, Objective::Trap, Variant::AllActive)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Turn {
    Cop,
    Robber,
}

/// A position: sorted cop multiset, robber vertex and the side to move.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GameState {
    pub cops: Vec<usize>,
    pub robber: usize,
    pub turn: Turn,
}

impl GameState {
    pub fn new(mut cops: Vec<usize>, robber: usize, turn: Turn) -> GameState {
        cops.sort_unstable();
        GameState { cops, robber, turn }
    }
}

fn check_positions(g: &Graph, cops: &[usize], r: usize) -> Result<()> {
    let n = g.order();
    match cops.iter().chain(std::iter::once(&r)).find(|&&v| v >= n) {
        Some(&v) => Err(Error::VertexOutOfRange { vertex: v, n }),
        None => Ok(()),
    }
}

/// Union of the cops' closed neighbourhoods.
pub(crate) fn guarded(g: &Graph, cops: &[usize]) -> VertexSet {
    cops.iter().fold(VertexSet::EMPTY, |acc, &c| acc.union(g.closed_nbrs(c)))
}

/// Robber moves that avoid capture on the next cop move.
pub fn safe_moves(g: &Graph, cops: &[usize], r: usize) -> Result<VertexSet> {
    check_positions(g, cops, r)?;
    Ok(g.closed_nbrs(r).difference(guarded(g, cops)))
}

/// Component of `r` in `G - ⋃ N[c]`; empty when `r` is guarded.
pub fn safe_region(g: &Graph, cops: &[usize], r: usize) -> Result<VertexSet> {
    check_positions(g, cops, r)?;
    Ok(region_unchecked(g, guarded(g, cops), r))
}

pub(crate) fn region_unchecked(g: &Graph, guard: VertexSet, r: usize) -> VertexSet {
    g.component_within(r, g.vertices().difference(guard))
}

/// Robber unguarded and unable to leave its vertex safely.
pub fn is_confined(g: &Graph, cops: &[usize], r: usize) -> Result<bool> {
    Ok(safe_moves(g, cops, r)? == VertexSet::singleton(r))
}

/// Witness `v` with `safe_region ⊆ N[v]`, preferring `v = r`, else the lowest index.
pub fn trap_witness(g: &Graph, cops: &[usize], r: usize) -> Result<Option<usize>> {
    check_positions(g, cops, r)?;
    Ok(trap_witness_unchecked(g, guarded(g, cops), r))
}

pub(crate) fn trap_witness_unchecked(g: &Graph, guard: VertexSet, r: usize) -> Option<usize> {
    if guard.contains(r) {
        return None;
    }
    let region = region_unchecked(g, guard, r);
    if region.is_subset(g.closed_nbrs(r)) {
        return Some(r);
    }
    (0..g.order()).find(|&v| region.is_subset(g.closed_nbrs(v)))
}

pub fn is_trapped(g: &Graph, cops: &[usize], r: usize) -> Result<bool> {
    Ok(trap_witness(g, cops, r)?.is_some())
}

/// Whether the objective's target holds with the robber to move.
pub fn target_holds(g: &Graph, objective: Objective, cops: &[usize], r: usize) -> Result<bool> {
    check_positions(g, cops, r)?;
    Ok(target_unchecked(g, objective, cops, guarded(g, cops), r))
}

pub(crate) fn target_unchecked(g: &Graph, objective: Objective, cops: &[usize], guard: VertexSet, r: usize) -> bool {
    if cops.contains(&r) {
        return true;
    }
    let safe = g.closed_nbrs(r).difference(guard);
    match objective {
        Objective::Capture => false,
        Objective::Confine => safe.is_subset(VertexSet::singleton(r)),
        Objective::Trap => safe.is_empty() || trap_witness_unchecked(g, guard, r).is_some(),
    }
}

/// Ordered pairs `(v, w)` with `d(v, w) = 2` and `N(v) ⊆ N(w)`: `w` confines `v`.
pub fn confined_corners(g: &Graph) -> Result<Vec<(usize, usize)>> {
    if g.order() < 3 {
        return Err(Error::InvalidArgument(format!("confined corners need at least 3 vertices, got {}", g.order())));
    }
    let mut out = Vec::new();
    for v in 0..g.order() {
        let second = g.open_nbrs_of_set(g.nbrs(v)).difference(g.closed_nbrs(v));
        for w in second.iter() {
            if g.nbrs(v).is_subset(g.nbrs(w)) {
                out.push((v, w));
            }
        }
    }
    Ok(out)
}
