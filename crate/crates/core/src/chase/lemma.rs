use serde::Serialize;

use super::{ChaseOutcome, ChaseTrace};
use crate::error::{Error, Result};
use crate::game::safe_region;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Serialize)]
pub struct Conclusion {
    /// 1 to 5, in the order of the lemma's conclusions.
    pub id: u8,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    pub steps: usize,
    pub conclusions: Vec<Conclusion>,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.conclusions.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Conclusion> {
        self.conclusions.iter().filter(|c| !c.pass)
    }
}

fn check(id: u8, failure: Option<String>) -> Conclusion {
    Conclusion { id, pass: failure.is_none(), detail: failure.unwrap_or_else(|| "ok".into()) }
}

/// Checks the five train-chasing conclusions on the realised prefix of a trace.
pub fn verify_lemma(trace: &ChaseTrace, g: &Graph) -> Result<LemmaReport> {
    let s = trace.steps();
    let n = g.order();
    let well_formed = trace.v.len() == s + 1
        && trace.h.len() == s + 1
        && trace.w.len() >= s
        && trace.cops.len() == s + 1
        && trace.cops.iter().all(|c| c.len() == trace.k)
        && s <= trace.k
        && trace.v.iter().chain(&trace.w).chain(trace.cops.iter().flatten()).all(|&x| x < n)
        && trace.h.iter().chain(&trace.x).all(|h| h.is_subset(g.vertices()));
    if !well_formed {
        return Err(Error::Trace("malformed chase trace".into()));
    }
    let v1 = trace.v[0];
    let mut out = Vec::with_capacity(5);

    // (1) nested connected induced subgraphs through v1, following the recursion.
    let mut fail = None;
    if trace.h[0] != g.vertices() {
        fail = Some("H_1 is not the whole graph".to_string());
    }
    for i in 0..s {
        if fail.is_some() {
            break;
        }
        let (hi, xi) = (trace.h[i], trace.x[i]);
        let expected = g.component_within(v1, hi.difference(xi));
        if trace.h[i + 1] != expected {
            fail = Some(format!("H_{} is not the component of v1 in H_{} - X_{}", i + 2, i + 1, i + 1));
        }
    }
    for (i, &h) in trace.h.iter().enumerate() {
        if fail.is_some() {
            break;
        }
        if !h.contains(v1) || !g.is_connected_within(h) {
            fail = Some(format!("H_{} is disconnected or misses v1", i + 1));
        } else if i > 0 && !h.is_subset(trace.h[i - 1]) {
            fail = Some(format!("H_{} is not contained in H_{}", i + 1, i));
        }
    }
    out.push(check(1, fail));

    // (2) every edge leaving H_{s+1} ends in some X_i.
    let last = trace.h[s];
    let pruned = trace.x.iter().fold(VertexSet::EMPTY, |acc, &x| acc.union(x));
    let boundary = g.open_nbrs_of_set(last).difference(last);
    out.push(check(
        2,
        (!boundary.is_subset(pruned))
            .then(|| format!("edges from H_{} reach {:?} outside every X_i", s + 1, boundary.difference(pruned))),
    ));

    // (3) v_1 .. v_{s+1} induce a path, inside H_s.
    let host = trace.h[s.saturating_sub(1)];
    let in_host = trace.v.iter().all(|&v| host.contains(v));
    out.push(check(
        3,
        (!(in_host && g.is_induced_path(&trace.v))).then(|| format!("{:?} is not an induced path", trace.v)),
    ));

    // (4) the schedule is playable and leaves C_i on v_i.
    let mut fail = None;
    for t in 1..trace.cops.len() {
        let (a, b) = (&trace.cops[t - 1], &trace.cops[t]);
        if let Some(c) = (0..trace.k).find(|&c| !g.closed_nbrs(a[c]).contains(b[c])) {
            fail = Some(format!("cop {} jumps from {} to {} at turn {t}", c + 1, a[c], b[c]));
            break;
        }
    }
    if fail.is_none() {
        let last = &trace.cops[s];
        if let Some(i) = (0..s).find(|&i| last[i] != trace.v[i]) {
            fail = Some(format!("cop {} ends on {} instead of v_{}", i + 1, last[i], i + 1));
        }
    }
    out.push(check(4, fail));

    // (5) cops frozen on v_1 .. v_s keep the robber inside H_{s+1}.
    let fail = match (s, trace.w.get(s)) {
        (0, _) | (_, None) => None,
        (_, Some(&w)) => {
            let region = safe_region(g, &trace.v[..s], w)?;
            (!region.is_subset(last))
                .then(|| format!("robber region {:?} escapes H_{}", region.difference(last), s + 1))
        }
    };
    out.push(check(5, fail));

    if let ChaseOutcome::RobberCaught { step } = trace.outcome {
        if step != s + 1 {
            return Err(Error::Trace(format!("capture recorded at step {step} after {s} steps")));
        }
    }
    Ok(LemmaReport { steps: s, conclusions: out })
}
