//! Corpora, verification suites, conjecture searches and JSON reports.

mod corpus;
mod report;
mod search;
mod suites;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::game::{game_number, Objective, Variant};
use crate::graph::Graph;

pub use corpus::{parse_range, CorpusSpec, Entry, Filters, Source};
pub use report::{CheckRecord, Report, Summary, SCHEMA};
pub use search::{run_search, SearchTarget};
pub use suites::{extremal_cograph, run_suite, Suite};

/// Default seed for randomised suites.
pub const DEFAULT_SEED: u64 = 20_240_801;

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub seed: u64,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    /// Number of seeded trials for randomised suites.
    pub trials: usize,
    /// Record wall time in the report. Off by default so reports are
    /// byte-identical across runs.
    pub timing: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { seed: DEFAULT_SEED, jobs: 0, trials: 1000, timing: false }
    }
}

/// Order-preserving parallel map on a pool of `jobs` threads.
pub fn par_map<T, R, F>(jobs: usize, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
    pool.install(|| items.par_iter().map(f).collect())
}

/// Each game number with the optimal round count of its first winning solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub c: usize,
    pub c_rounds: u32,
    pub tcn: usize,
    pub tcn_rounds: u32,
    pub ccn: usize,
    pub ccn_rounds: u32,
}

impl Invariants {
    pub fn order_chain_holds(&self) -> bool {
        self.tcn <= self.ccn && self.ccn <= self.c && self.c <= self.tcn + 1
    }
}

pub fn invariants(g: &Graph) -> Result<Invariants> {
    let number = |o| -> Result<(usize, u32)> {
        let (k, out) = game_number(g, o, Variant::AllActive)?;
        Ok((k, out.optimal_rounds.expect("winning solve has rounds")))
    };
    let (c, c_rounds) = number(Objective::Capture)?;
    let (tcn, tcn_rounds) = number(Objective::Trap)?;
    let (ccn, ccn_rounds) = number(Objective::Confine)?;
    Ok(Invariants { c, c_rounds, tcn, tcn_rounds, ccn, ccn_rounds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn c4_invariants() {
        let inv = invariants(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!((inv.c, inv.tcn, inv.ccn), (2, 1, 1));
        assert!(inv.order_chain_holds());
    }

    #[test]
    fn par_map_keeps_order() {
        let xs: Vec<usize> = (0..100).collect();
        assert_eq!(par_map(3, &xs, |x| x * 2), xs.iter().map(|x| x * 2).collect::<Vec<_>>());
    }

    #[test]
    fn petersen_trap_number() {
        let inv = invariants(&named::petersen()).unwrap();
        assert_eq!((inv.c, inv.ccn), (3, 3));
        assert!(inv.order_chain_holds());
    }
}
