use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use super::corpus::{CorpusSpec, Source};
use super::report::Report;
use super::{par_map, RunOptions};
use crate::error::{Error, Result};
use crate::game::{solve, GameConfig};

/// Largest order covered by the planar conjecture.
const PLANAR_BOUND: usize = 19;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchTarget {
    /// Connected `P_5`-free graphs with ccn at least 3.
    P5freeCcn3,
    /// Connected planar graphs on at most 19 vertices with ccn at least 3.
    PlanarCcn3,
}

impl SearchTarget {
    pub const ALL: [SearchTarget; 2] = [SearchTarget::P5freeCcn3, SearchTarget::PlanarCcn3];

    pub fn name(self) -> &'static str {
        match self {
            SearchTarget::P5freeCcn3 => "p5free-ccn3",
            SearchTarget::PlanarCcn3 => "planar-ccn3",
        }
    }
}

impl fmt::Display for SearchTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SearchTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SearchTarget::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| {
            Error::InvalidArgument(format!("unknown search target `{s}` (known: p5free-ccn3, planar-ccn3)"))
        })
    }
}

/// Looks for graphs with confining cop number at least 3 in the target class.
/// Finding none is reported as exactly that, never as a proof.
pub fn run_search(target: SearchTarget, corpus: Option<CorpusSpec>, opts: &RunOptions) -> Result<Report> {
    let start = Instant::now();
    let mut spec = match corpus {
        Some(c) if !c.is_empty() => c,
        _ => CorpusSpec::new(vec![Source::Internal(1..=6)]),
    };
    spec.filters.connected = true;
    match target {
        SearchTarget::P5freeCcn3 => spec.filters.pk_free = Some(5),
        SearchTarget::PlanarCcn3 => spec.filters.planar = Some(true),
    }
    let entries = spec.resolve()?;
    let claim = match target {
        SearchTarget::P5freeCcn3 => "every connected P5-free graph has ccn <= 2",
        SearchTarget::PlanarCcn3 => "every connected planar graph on at most 19 vertices has ccn <= 2",
    };
    let mut report = Report::new("search", target.name(), claim, spec.to_string(), opts.seed);
    report.graphs = entries.len();
    let rows = par_map(opts.jobs, &entries, |e| Ok::<_, Error>(solve(&e.graph, GameConfig::confine(2)?)?.cops_win));
    let mut found = Vec::new();
    for (e, two_confine) in entries.iter().zip(rows) {
        let high = !two_confine?;
        let n = e.graph.order();
        let counts = target == SearchTarget::P5freeCcn3 || n <= PLANAR_BOUND;
        if high && !counts {
            report.note(format!(
                "{} ({n} vertices) has ccn >= 3 but lies above the {PLANAR_BOUND}-vertex bound, so it is not a counterexample",
                e.id
            ));
        }
        let pass = !(high && counts);
        if !pass {
            found.push(e.id.clone());
        }
        report.check(&e.id, "ccn <= 2", "2 cops confine", if high { "ccn >= 3" } else { "ccn <= 2" }, pass || !counts);
    }
    if found.is_empty() {
        report.note(format!("no counterexample found among {} graphs", entries.len()));
    } else {
        report.note(format!("counterexamples found: {}", found.join(", ")));
    }
    if opts.timing {
        report.wall_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}
