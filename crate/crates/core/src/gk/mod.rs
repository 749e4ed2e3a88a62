//! Necessary structure of connected `P_k`-free graphs whose cop number
//! (flavour `Gk`) or confining cop number (flavour `Gkc`) equals `k - 2`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::chase::{train_chase, ChaseOutcome, SolverEvader};
use crate::error::{Error, Result};
use crate::game::{solve, GameConfig, Objective, Variant, MAX_COPS};
use crate::graph::{named, Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Flavour {
    /// Cop number `k - 2`.
    Gk,
    /// Confining cop number `k - 2`.
    Gkc,
}

impl Flavour {
    fn objective(self) -> Objective {
        match self {
            Flavour::Gk => Objective::Capture,
            Flavour::Gkc => Objective::Confine,
        }
    }
}

impl fmt::Display for Flavour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavour::Gk => "G_k",
            Flavour::Gkc => "G_k,c",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ClassTag {
    pub k: usize,
    pub flavour: Flavour,
}

impl ClassTag {
    pub fn new(k: usize, flavour: Flavour) -> Result<ClassTag> {
        if k < 4 {
            return Err(Error::InvalidArgument(format!("class index k must be >= 4, got {k}")));
        }
        if k - 2 > MAX_COPS {
            return Err(Error::TooManyCops(k - 2));
        }
        Ok(ClassTag { k, flavour })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub pk_free: bool,
    pub in_gk: bool,
    pub in_gkc: bool,
}

impl Membership {
    pub fn contains(&self, flavour: Flavour) -> bool {
        match flavour {
            Flavour::Gk => self.in_gk,
            Flavour::Gkc => self.in_gkc,
        }
    }
}

/// `k - 2` cops win and `k - 3` do not, per objective.
pub fn membership(g: &Graph, k: usize) -> Result<Membership> {
    ClassTag::new(k, Flavour::Gk)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let pk_free = g.is_pk_free(k)?;
    if !pk_free {
        return Ok(Membership { pk_free, in_gk: false, in_gkc: false });
    }
    let exactly = |objective| -> Result<bool> {
        let wins =
            |cops| -> Result<bool> { Ok(solve(g, GameConfig::new(cops, objective, Variant::AllActive)?)?.cops_win) };
        Ok(wins(k - 2)? && !wins(k - 3)?)
    };
    Ok(Membership { pk_free, in_gk: exactly(Objective::Capture)?, in_gkc: exactly(Objective::Confine)? })
}

#[derive(Debug, Clone, Serialize)]
pub struct MjFamily {
    pub tag: ClassTag,
    /// `v_1 ..= v_{k-2}`.
    pub base: Vec<usize>,
    /// `M_1 ..= M_{k-2}`, index `j - 1`.
    pub m: Vec<VertexSet>,
    /// Non-empty layers `M_j` with `j > k - 2`.
    pub higher: BTreeMap<usize, VertexSet>,
    /// `H_{k-2}`.
    pub h: VertexSet,
    /// Robber position at the end of step `k - 3`.
    pub w: usize,
}

impl MjFamily {
    /// `M_j` for any `j >= 1`.
    pub fn get(&self, j: usize) -> VertexSet {
        match j {
            0 => VertexSet::EMPTY,
            j if j <= self.m.len() => self.m[j - 1],
            j => self.higher.get(&j).copied().unwrap_or(VertexSet::EMPTY),
        }
    }
}

fn require_member(g: &Graph, tag: ClassTag) -> Result<()> {
    let m = membership(g, tag.k)?;
    if !m.contains(tag.flavour) {
        return Err(Error::Membership(format!("graph is not in {} for k = {}", tag.flavour, tag.k)));
    }
    Ok(())
}

/// Runs `k - 3` chasing steps from `v1` against the solved evader of the
/// flavour's objective and reads off the layers around `v_1 .. v_{k-2}`.
pub fn compute_mj(g: &Graph, tag: ClassTag, v1: usize) -> Result<MjFamily> {
    require_member(g, tag)?;
    family_unchecked(g, tag, v1)
}

fn family_unchecked(g: &Graph, tag: ClassTag, v1: usize) -> Result<MjFamily> {
    let k = tag.k;
    let game = solve(g, GameConfig::new(k - 3, tag.flavour.objective(), Variant::AllActive)?)?;
    let trace = train_chase(g, v1, k - 3, &mut SolverEvader(&game))?;
    if trace.outcome != ChaseOutcome::Completed {
        return Err(Error::Trace("winning evader was caught during the chase".into()));
    }
    let base = trace.v.clone();
    let h = trace.h[k - 3];
    let closed: Vec<VertexSet> = base.iter().map(|&v| g.closed_nbrs(v)).collect();
    let mut m: Vec<VertexSet> = (0..k - 3)
        .map(|j| {
            let others = (0..k - 2).filter(|&i| i != j).fold(VertexSet::EMPTY, |acc, i| acc.union(closed[i]));
            g.nbrs(base[j]).difference(others)
        })
        .collect();
    m.push(g.distance_layer_within(v1, h, k - 2));
    let mut higher = BTreeMap::new();
    for j in k - 1..=g.order() {
        let layer = g.distance_layer_within(v1, h, j);
        if layer.is_empty() {
            break;
        }
        higher.insert(j, layer);
    }
    Ok(MjFamily { tag, base, m, higher, h, w: trace.w[k - 3] })
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub claim: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(claim: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
        Check { claim: claim.into(), pass, detail: detail.into() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub tag: ClassTag,
    pub v1: usize,
    pub checks: Vec<Check>,
}

impl StructureReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn family_matches(g: &Graph, tag: ClassTag, fam: &MjFamily) -> Result<()> {
    let k = tag.k;
    let ok = fam.tag == tag
        && fam.base.len() == k - 2
        && fam.m.len() == k - 2
        && fam.base.iter().chain(std::iter::once(&fam.w)).all(|&v| v < g.order())
        && fam.h.is_subset(g.vertices());
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidArgument("malformed M_j family".into()))
    }
}

fn fmt_set(s: VertexSet) -> String {
    format!("{:?}", s.to_vec())
}

/// Layer conditions, the `M_1`-`M_{k-2}` join, induced `k`-cycles and the
/// robber's position for a member of `G_k`.
pub fn verify_gk(g: &Graph, k: usize, fam: &MjFamily) -> Result<StructureReport> {
    let tag = ClassTag::new(k, fam.tag.flavour)?;
    family_matches(g, tag, fam)?;
    require_member(g, ClassTag::new(k, Flavour::Gk)?)?;
    let mut checks = Vec::new();
    let base_set: VertexSet = fam.base.iter().copied().collect();
    let (first, last) = (fam.get(1), fam.get(k - 2));

    let mut disjoint = fam.m.iter().all(|s| !s.intersects(base_set));
    for (i, a) in fam.m.iter().enumerate() {
        disjoint &= fam.m[i + 1..].iter().all(|b| !a.intersects(*b));
    }
    checks.push(Check::new("M_j pairwise disjoint and off the base path", disjoint, ""));

    let beyond: Vec<usize> = fam.higher.keys().copied().collect();
    checks.push(Check::new("M_j empty for j >= k-1", beyond.is_empty(), format!("non-empty layers {beyond:?}")));

    let empty: Vec<usize> = (1..=k - 2).filter(|&j| fam.get(j).is_empty()).collect();
    checks.push(Check::new("M_j non-empty for 1 <= j <= k-2", empty.is_empty(), format!("empty {empty:?}")));

    let join = first.iter().all(|u| last.is_subset(g.nbrs(u)));
    checks.push(Check::new(
        "M_1 complete to M_{k-2}",
        join,
        format!("M_1 = {}, M_k-2 = {}", fmt_set(first), fmt_set(last)),
    ));

    let mut cycles = true;
    for u in first.iter() {
        for z in last.iter() {
            cycles &= g.induces_cycle(base_set.with(u).with(z)) && base_set.with(u).with(z).len() == k;
        }
    }
    checks.push(Check::new("each u in M_1, z in M_{k-2} closes an induced k-cycle with the base", cycles, ""));

    let off_cycle: Vec<usize> =
        (0..g.order()).filter(|&v| !g.has_induced_cycle_through(v, k).unwrap_or(false)).collect();
    checks.push(Check::new(
        "every vertex on an induced C_k",
        off_cycle.is_empty(),
        format!("vertices off every induced C_k: {off_cycle:?}"),
    ));

    let hub = (1..=k - 3).fold(g.vertices(), |acc, j| acc.intersection(g.open_nbrs_of_set(fam.get(j))));
    checks.push(Check::new("w adjacent to every M_j, j <= k-3", hub.contains(fam.w), format!("w = {}", fam.w)));
    checks.push(Check::new("M_{k-2} meets the common neighbourhood of M_1 .. M_{k-3}", last.intersects(hub), ""));
    let missing: Vec<usize> =
        (4..=k).filter(|&j| !(0..g.order()).any(|v| g.has_induced_cycle_through(v, j).unwrap_or(false))).collect();
    checks.push(Check::new("induced C_j present for 4 <= j <= k", missing.is_empty(), format!("missing {missing:?}")));

    let two = g.is_two_connected().unwrap_or(false);
    checks.push(Check::new("2-connected", two, ""));
    Ok(StructureReport { tag, v1: fam.base[0], checks })
}

/// Size, internal-edge, order, planarity and degree conditions for a member of `G_k,c`.
pub fn verify_gkc(g: &Graph, k: usize, fam: &MjFamily) -> Result<StructureReport> {
    let tag = ClassTag::new(k, Flavour::Gkc)?;
    family_matches(g, tag, fam)?;
    require_member(g, tag)?;
    let mut checks = Vec::new();
    for j in [1, k - 2] {
        let s = fam.get(j);
        checks.push(Check::new(format!("|M_{j}| >= 2"), s.len() >= 2, fmt_set(s)));
        let edge = s.iter().any(|u| g.nbrs(u).intersects(s));
        checks.push(Check::new(format!("M_{j} spans an edge"), edge, fmt_set(s)));
    }
    let n = g.order();
    checks.push(Check::new("|V| >= 2k-2", n + 2 >= 2 * k, format!("|V| = {n}")));
    checks.push(Check::new("non-planar", !g.is_planar(), ""));
    let (dmin, dmax) = (g.min_degree(), g.max_degree());
    checks.push(Check::new("min degree >= 3", dmin >= 3, format!("min degree {dmin}")));
    checks.push(Check::new("max degree >= k", dmax >= k, format!("max degree {dmax}")));
    if k >= 5 {
        checks.push(Check::new("min degree >= 4", dmin >= 4, format!("min degree {dmin}")));
    }
    checks.push(Check::new("2-connected", g.is_two_connected().unwrap_or(false), ""));
    Ok(StructureReport { tag, v1: fam.base[0], checks })
}

/// The 6-vertex gadget on base `v_1 v_2` with `M_1 = {u, u'}` and `M_2 = {w, w'}`.
pub fn g1_gadget(k: usize) -> Result<Graph> {
    if k != 4 {
        return Err(Error::InvalidArgument(format!("the gadget is defined for k = 4 only, got {k}")));
    }
    Ok(named::g1_gadget())
}
