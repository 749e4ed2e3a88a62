//! Retrograde attractor computation over (cop multiset, robber, turn) states.
//!
//! A robber-turn state is ranked 0 when the target holds and otherwise takes
//! the largest rank among its cop-turn successors; a cop-turn state is one
//! more than its best robber-turn successor. Ranks count cop turns, so the
//! rank of a robber-turn state is the minimax number of cop turns until the
//! target first holds. States never ranked are robber wins.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use super::{guarded, target_unchecked, GameConfig, GameState, Objective, Turn, Variant, MAX_COPS};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Upper bound on the estimated transition count of a single solve.
pub const STATE_GUARD: u64 = 500_000_000;

const UNRANKED: u16 = u16::MAX;

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// Dense indexing of sorted cop multisets of size `k` over `n` vertices.
#[derive(Debug, Clone)]
pub struct Placements {
    k: usize,
    tuples: Vec<[u8; MAX_COPS]>,
    binom: Vec<[u32; MAX_COPS + 1]>,
}

impl Placements {
    pub fn new(n: usize, k: usize) -> Placements {
        assert!((1..=MAX_COPS).contains(&k), "cop count out of range");
        let binom = (0..n + k)
            .map(|m| {
                let mut row = [0u32; MAX_COPS + 1];
                for (j, slot) in row.iter_mut().enumerate() {
                    *slot = binomial(m, j) as u32;
                }
                row
            })
            .collect();
        let mut p = Placements { k, tuples: Vec::new(), binom };
        p.tuples = vec![[0; MAX_COPS]; p.count_for(n, k) as usize];
        let mut cur = vec![0usize; k];
        loop {
            let idx = p.index(&cur);
            let t = &mut p.tuples[idx];
            for (i, &c) in cur.iter().enumerate() {
                t[i] = c as u8;
            }
            // Next non-decreasing tuple.
            let mut i = k;
            while i > 0 && cur[i - 1] == n - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            cur[i - 1] += 1;
            let v = cur[i - 1];
            for c in cur.iter_mut().skip(i) {
                *c = v;
            }
        }
        p
    }

    fn count_for(&self, n: usize, k: usize) -> u64 {
        binomial(n + k - 1, k)
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn cops(&self) -> usize {
        self.k
    }

    /// Index of a sorted tuple.
    #[inline]
    pub fn index(&self, sorted: &[usize]) -> usize {
        debug_assert!(sorted.windows(2).all(|w| w[0] <= w[1]));
        sorted.iter().enumerate().map(|(i, &c)| self.binom[c + i][i + 1] as usize).sum()
    }

    pub fn index_unsorted(&self, cops: &[usize]) -> usize {
        let mut s = cops.to_vec();
        s.sort_unstable();
        self.index(&s)
    }

    pub fn tuple(&self, idx: usize) -> Vec<usize> {
        self.tuples[idx][..self.k].iter().map(|&c| c as usize).collect()
    }

    /// Distinct placements reachable in one cop turn.
    pub fn moves(&self, g: &Graph, idx: usize, variant: Variant) -> Vec<usize> {
        let cur = self.tuple(idx);
        let mut out = Vec::new();
        match variant {
            Variant::OneActive => {
                out.push(idx);
                for i in 0..self.k {
                    for x in g.nbrs(cur[i]).iter() {
                        let mut next = cur.clone();
                        next[i] = x;
                        out.push(self.index_unsorted(&next));
                    }
                }
            }
            Variant::AllActive => {
                let options: Vec<Vec<usize>> = cur.iter().map(|&c| g.closed_nbrs(c).to_vec()).collect();
                let mut pick = vec![0usize; self.k];
                let mut next = vec![0usize; self.k];
                'outer: loop {
                    for i in 0..self.k {
                        next[i] = options[i][pick[i]];
                    }
                    out.push(self.index_unsorted(&next));
                    for i in (0..self.k).rev() {
                        pick[i] += 1;
                        if pick[i] < options[i].len() {
                            continue 'outer;
                        }
                        pick[i] = 0;
                    }
                    break;
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Exact result of one game configuration on one graph.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    graph: Graph,
    config: GameConfig,
    placements: Placements,
    robber_rank: Vec<u16>,
    cop_rank: Vec<u16>,
    pub cops_win: bool,
    /// Minimax cop turns until the target first holds, from the best placement.
    pub optimal_rounds: Option<u32>,
    pub best_initial_placement: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OutcomeSummary {
    pub cops: usize,
    pub objective: Objective,
    pub variant: Variant,
    pub cops_win: bool,
    pub optimal_rounds: Option<u32>,
    pub best_initial_placement: Option<Vec<usize>>,
}

pub fn solve(g: &Graph, cfg: GameConfig) -> Result<SolveOutcome> {
    let n = g.order();
    if n == 0 {
        return Err(Error::InvalidArgument("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if cfg.cops == 0 {
        return Err(Error::InvalidArgument("at least one cop is required".into()));
    }
    if cfg.cops > MAX_COPS {
        return Err(Error::TooManyCops(cfg.cops));
    }
    let p = binomial(n + cfg.cops - 1, cfg.cops);
    let d = g.max_degree() as u64 + 1;
    let branch = match cfg.variant {
        Variant::AllActive => d.pow(cfg.cops as u32),
        Variant::OneActive => 1 + cfg.cops as u64 * (d - 1),
    };
    let states = 2 * p * n as u64 * branch.min(p);
    if states > STATE_GUARD {
        return Err(Error::StateSpaceGuard { states, limit: STATE_GUARD });
    }
    let placements = Placements::new(n, cfg.cops);
    let p = placements.len();
    let mut robber_rank = vec![UNRANKED; p * n];
    let mut cop_rank = vec![UNRANKED; p * n];
    let mut pending = vec![0u8; p * n];
    let mut queue = VecDeque::new();

    for c in 0..p {
        let cops = placements.tuple(c);
        let guard = guarded(g, &cops);
        for r in 0..n {
            let s = c * n + r;
            if target_unchecked(g, cfg.objective, &cops, guard, r) {
                robber_rank[s] = 0;
                queue.push_back((Turn::Robber, s));
            } else {
                pending[s] = g.closed_nbrs(r).len() as u8;
            }
        }
    }

    let mut move_cache: Vec<Option<Vec<usize>>> = vec![None; p];
    while let Some((turn, s)) = queue.pop_front() {
        let (c, r) = (s / n, s % n);
        match turn {
            Turn::Robber => {
                let rank = robber_rank[s];
                // Cop moves are symmetric, so successors double as predecessors.
                let preds = move_cache[c].get_or_insert_with(|| placements.moves(g, c, cfg.variant)).clone();
                for pc in preds {
                    let q = pc * n + r;
                    if cop_rank[q] == UNRANKED {
                        cop_rank[q] = rank + 1;
                        queue.push_back((Turn::Cop, q));
                    }
                }
            }
            Turn::Cop => {
                let rank = cop_rank[s];
                for pr in g.closed_nbrs(r).iter() {
                    let t = c * n + pr;
                    if robber_rank[t] != UNRANKED {
                        continue;
                    }
                    pending[t] -= 1;
                    if pending[t] == 0 {
                        robber_rank[t] = rank;
                        queue.push_back((Turn::Robber, t));
                    }
                }
            }
        }
    }

    let mut best: Option<(u16, Vec<usize>)> = None;
    for c in 0..p {
        let worst = (0..n).map(|r| robber_rank[c * n + r]).max().unwrap_or(UNRANKED);
        if worst == UNRANKED {
            continue;
        }
        let tuple = placements.tuple(c);
        let better = match &best {
            None => true,
            Some((b, t)) => worst < *b || (worst == *b && tuple < *t),
        };
        if better {
            best = Some((worst, tuple));
        }
    }
    Ok(SolveOutcome {
        graph: g.clone(),
        config: cfg,
        placements,
        robber_rank,
        cop_rank,
        cops_win: best.is_some(),
        optimal_rounds: best.as_ref().map(|(r, _)| *r as u32),
        best_initial_placement: best.map(|(_, t)| t),
    })
}

impl SolveOutcome {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn config(&self) -> GameConfig {
        self.config
    }

    pub fn summary(&self) -> OutcomeSummary {
        OutcomeSummary {
            cops: self.config.cops,
            objective: self.config.objective,
            variant: self.config.variant,
            cops_win: self.cops_win,
            optimal_rounds: self.optimal_rounds,
            best_initial_placement: self.best_initial_placement.clone(),
        }
    }

    fn state_index(&self, cops: &[usize], r: usize) -> Result<usize> {
        let n = self.graph.order();
        if cops.len() != self.config.cops {
            return Err(Error::InvalidArgument(format!("expected {} cops, got {}", self.config.cops, cops.len())));
        }
        if let Some(&v) = cops.iter().chain(std::iter::once(&r)).find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        Ok(self.placements.index_unsorted(cops) * n + r)
    }

    fn rank(x: u16) -> Option<u32> {
        (x != UNRANKED).then_some(x as u32)
    }

    /// Cop turns until the target holds with the robber to move, under optimal play.
    pub fn rounds_robber_to_move(&self, cops: &[usize], r: usize) -> Result<Option<u32>> {
        Ok(Self::rank(self.robber_rank[self.state_index(cops, r)?]))
    }

    /// Cop turns until the target holds with the cops to move, under optimal play.
    pub fn rounds_cops_to_move(&self, cops: &[usize], r: usize) -> Result<Option<u32>> {
        Ok(Self::rank(self.cop_rank[self.state_index(cops, r)?]))
    }

    /// Cops' guaranteed round count from a placement, or `None` if the robber escapes.
    pub fn placement_value(&self, cops: &[usize]) -> Result<Option<u32>> {
        let n = self.graph.order();
        let mut worst = 0;
        for r in 0..n {
            match self.rounds_robber_to_move(cops, r)? {
                Some(x) => worst = worst.max(x),
                None => return Ok(None),
            }
        }
        Ok(Some(worst))
    }

    /// Robber's start against `cops`: an escaping vertex if one exists,
    /// otherwise the most delaying. Ties go to vertices outside the cops'
    /// closed neighbourhoods, then to the lowest index.
    pub fn robber_start(&self, cops: &[usize]) -> Result<usize> {
        let guard = self.guard(cops);
        let mut best: Option<((u32, bool), usize)> = None;
        for r in 0..self.graph.order() {
            let v = match self.rounds_robber_to_move(cops, r)? {
                None => return Ok(r),
                Some(x) => (x, !guard.contains(r)),
            };
            if best.is_none_or(|(b, _)| v > b) {
                best = Some((v, r));
            }
        }
        Ok(best.expect("graph is non-empty").1)
    }

    /// Robber's reply at a robber-turn state: stay out of the attractor if
    /// possible, otherwise maximise the remaining rounds. Ties break as in
    /// [`SolveOutcome::robber_start`].
    pub fn robber_move(&self, cops: &[usize], r: usize) -> Result<usize> {
        self.state_index(cops, r)?;
        let guard = self.guard(cops);
        let mut best: Option<((u32, bool), usize)> = None;
        for x in self.graph.closed_nbrs(r).iter() {
            let v = match self.rounds_cops_to_move(cops, x)? {
                None => return Ok(x),
                Some(v) => (v, !guard.contains(x)),
            };
            if best.is_none_or(|(b, _)| v > b) {
                best = Some((v, x));
            }
        }
        Ok(best.expect("closed neighbourhood is non-empty").1)
    }

    fn guard(&self, cops: &[usize]) -> VertexSet {
        cops.iter().fold(VertexSet::EMPTY, |acc, &c| acc.union(self.graph.closed_nbrs(c)))
    }

    /// Cops' reply at a cop-turn state: the lowest-rank successor, ties to the
    /// lexicographically smallest placement.
    pub fn cop_move(&self, cops: &[usize], r: usize) -> Result<Vec<usize>> {
        let s = self.state_index(cops, r)?;
        let n = self.graph.order();
        let c = s / n;
        let mut best: Option<(u16, Vec<usize>)> = None;
        for next in self.placements.moves(&self.graph, c, self.config.variant) {
            let v = self.robber_rank[next * n + r];
            let tuple = self.placements.tuple(next);
            let better = match &best {
                None => true,
                Some((b, t)) => v < *b || (v == *b && tuple < *t),
            };
            if better {
                best = Some((v, tuple));
            }
        }
        Ok(best.expect("placement has moves").1)
    }

    /// Legal cop replies from a placement under this configuration's variant.
    pub fn cop_options(&self, cops: &[usize]) -> Result<Vec<Vec<usize>>> {
        let s = self.state_index(cops, 0)?;
        let c = s / self.graph.order();
        Ok(self
            .placements
            .moves(&self.graph, c, self.config.variant)
            .into_iter()
            .map(|i| self.placements.tuple(i))
            .collect())
    }

    /// Cop strategy on every cop-turn state reachable from the best placement
    /// when the cops follow it and the robber plays arbitrarily. `None` when
    /// the cops lose.
    pub fn cop_strategy(&self) -> Option<BTreeMap<GameState, Vec<usize>>> {
        let start = self.best_initial_placement.clone()?;
        let g = &self.graph;
        let mut map = BTreeMap::new();
        let mut stack: Vec<(Vec<usize>, usize)> = (0..g.order()).map(|r| (start.clone(), r)).collect();
        let mut seen = std::collections::HashSet::new();
        while let Some((cops, r)) = stack.pop() {
            if !seen.insert((cops.clone(), r)) {
                continue;
            }
            let guard = guarded(g, &cops);
            if target_unchecked(g, self.config.objective, &cops, guard, r) {
                continue;
            }
            for x in g.closed_nbrs(r).iter() {
                let key = GameState::new(cops.clone(), x, Turn::Cop);
                if map.contains_key(&key) {
                    continue;
                }
                let reply = self.cop_move(&cops, x).expect("valid state");
                stack.push((reply.clone(), x));
                map.insert(key, reply);
            }
        }
        Some(map)
    }

    /// Robber strategy on every robber-turn state reachable when the robber
    /// follows [`Self::robber_start`]/[`Self::robber_move`] and the cops play
    /// arbitrarily, from the best placement if the cops win, else from every
    /// placement.
    pub fn robber_strategy(&self) -> BTreeMap<GameState, usize> {
        let g = &self.graph;
        let starts: Vec<Vec<usize>> = match &self.best_initial_placement {
            Some(p) => vec![p.clone()],
            None => (0..self.placements.len()).map(|i| self.placements.tuple(i)).collect(),
        };
        let mut map = BTreeMap::new();
        let mut stack: Vec<(Vec<usize>, usize)> = starts
            .into_iter()
            .map(|c| {
                let r = self.robber_start(&c).expect("valid placement");
                (c, r)
            })
            .collect();
        while let Some((cops, r)) = stack.pop() {
            let key = GameState::new(cops.clone(), r, Turn::Robber);
            if map.contains_key(&key) {
                continue;
            }
            let guard = guarded(g, &cops);
            if target_unchecked(g, self.config.objective, &cops, guard, r) {
                continue;
            }
            let x = self.robber_move(&cops, r).expect("valid state");
            map.insert(key, x);
            for next in self.cop_options(&cops).expect("valid placement") {
                if !next.contains(&x) {
                    stack.push((next, x));
                }
            }
        }
        map
    }
}

/// Smallest `k ≤ MAX_COPS` for which the cops win, with that solve.
pub fn game_number(g: &Graph, objective: Objective, variant: Variant) -> Result<(usize, SolveOutcome)> {
    for k in 1..=MAX_COPS {
        let out = solve(g, GameConfig::new(k, objective, variant)?)?;
        if out.cops_win {
            return Ok((k, out));
        }
    }
    Err(Error::NumberAboveLimit(format!("{objective} ({variant})")))
}

pub fn cop_number(g: &Graph) -> Result<usize> {
    Ok(game_number(g, Objective::Capture, Variant::AllActive)?.0)
}

pub fn trapping_cop_number(g: &Graph) -> Result<usize> {
    Ok(game_number(g, Objective::Trap, Variant::AllActive)?.0)
}

pub fn confining_cop_number(g: &Graph) -> Result<usize> {
    Ok(game_number(g, Objective::Confine, Variant::AllActive)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn placement_indexing_is_dense() {
        for (n, k) in [(5, 1), (5, 2), (6, 3), (4, 4)] {
            let p = Placements::new(n, k);
            assert_eq!(p.len() as u64, binomial(n + k - 1, k));
            for i in 0..p.len() {
                assert_eq!(p.index(&p.tuple(i)), i);
            }
        }
    }

    #[test]
    fn one_active_moves_subset_of_all_active() {
        let g = named::petersen();
        let p = Placements::new(10, 2);
        for i in 0..p.len() {
            let all = p.moves(&g, i, Variant::AllActive);
            for m in p.moves(&g, i, Variant::OneActive) {
                assert!(all.contains(&m));
            }
        }
    }

    #[test]
    fn paths_are_cop_win() {
        let out = solve(&Graph::path(4).unwrap(), GameConfig::capture(1).unwrap()).unwrap();
        assert!(out.cops_win);
        assert_eq!(out.best_initial_placement, Some(vec![1]));
        assert_eq!(out.optimal_rounds, Some(2));
    }

    #[test]
    fn c4_values() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(!solve(&c4, GameConfig::capture(1).unwrap()).unwrap().cops_win);
        assert!(solve(&c4, GameConfig::capture(2).unwrap()).unwrap().cops_win);
        let conf = solve(&c4, GameConfig::confine(1).unwrap()).unwrap();
        assert!(conf.cops_win);
        assert_eq!(conf.optimal_rounds, Some(1));
        assert_eq!(cop_number(&c4).unwrap(), 2);
        assert_eq!(confining_cop_number(&c4).unwrap(), 1);
        assert_eq!(trapping_cop_number(&c4).unwrap(), 1);
    }

    #[test]
    fn c5_values() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(cop_number(&c5).unwrap(), 2);
        assert_eq!(trapping_cop_number(&c5).unwrap(), 1);
        assert_eq!(confining_cop_number(&c5).unwrap(), 2);
    }

    #[test]
    fn named_graph_values() {
        let pet = named::petersen();
        assert_eq!(cop_number(&pet).unwrap(), 3);
        assert_eq!(confining_cop_number(&pet).unwrap(), 3);
        let dod = named::dodecahedron();
        assert_eq!(cop_number(&dod).unwrap(), 3);
        assert_eq!(confining_cop_number(&dod).unwrap(), 3);
    }

    #[test]
    fn errors() {
        let two = Graph::empty(2).unwrap();
        assert_eq!(solve(&two, GameConfig::capture(1).unwrap()).unwrap_err(), Error::Disconnected);
        let big = Graph::complete(31).unwrap();
        assert!(matches!(solve(&big, GameConfig::capture(4).unwrap()), Err(Error::StateSpaceGuard { .. })));
    }

    #[test]
    fn strategies_cover_reachable_states() {
        let c4 = Graph::cycle(4).unwrap();
        let out = solve(&c4, GameConfig::capture(2).unwrap()).unwrap();
        let cops = out.cop_strategy().unwrap();
        assert!(!cops.is_empty());
        for (state, reply) in &cops {
            assert_eq!(state.turn, Turn::Cop);
            assert_eq!(reply.len(), 2);
        }
        let lose = solve(&c4, GameConfig::capture(1).unwrap()).unwrap();
        assert!(lose.cop_strategy().is_none());
        let robber = lose.robber_strategy();
        for (state, &x) in &robber {
            assert!(c4.closed_nbrs(state.robber).contains(x));
            assert!(lose.rounds_cops_to_move(&state.cops, x).unwrap().is_none());
        }
    }
}
