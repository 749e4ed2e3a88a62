//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use crgames::cograph::{cotree_code, enumerate_connected_cographs, is_cograph};
use crgames::game::{is_dismantlable, solve, GameConfig};
use crgames::graph::{canonical_code, named, Graph};
use crgames::harness::{
    extremal_cograph, invariants, run_search, run_suite, CorpusSpec, Report, RunOptions, SearchTarget, Source, Suite,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn suite(s: Suite, corpus: Option<CorpusSpec>, opts: &RunOptions) -> Result<Report, String> {
    let r = run_suite(s, corpus, opts).map_err(|e| e.to_string())?;
    if let Some(f) = r.failures().next() {
        return Err(format!(
            "{} of {} checks failed, first: {} {}: expected {}, got {}",
            r.summary.failed, r.summary.checks, f.graph, f.claim, f.expected, f.actual
        ));
    }
    Ok(r)
}

fn opts() -> RunOptions {
    RunOptions::default()
}

fn c1_order_chain() -> Outcome {
    let r = suite(Suite::OrderChain, Some(CorpusSpec::internal(1..=6)), &opts())?;
    let reference = atlas().iter().filter(|a| a.n <= 6 && a.connected).count();
    ensure(r.graphs == 143, format!("enumerated {} connected graphs", r.graphs))?;
    ensure(reference == 143, format!("reference corpus has {reference}"))?;
    Ok(format!("{} graphs, reference corpus agrees ({reference})", r.graphs))
}

fn c2_c4() -> Outcome {
    let inv = invariants(&Graph::cycle(4).unwrap()).map_err(|e| e.to_string())?;
    ensure((inv.c, inv.ccn, inv.tcn) == (2, 1, 1), format!("c={} ccn={} tcn={}", inv.c, inv.ccn, inv.tcn))?;
    Ok("c=2 ccn=1 tcn=1".into())
}

fn c3_petersen() -> Outcome {
    suite(Suite::Petersen, None, &opts())?;
    let inv = invariants(&named::petersen()).map_err(|e| e.to_string())?;
    ensure((inv.c, inv.ccn) == (3, 3), format!("c={} ccn={}", inv.c, inv.ccn))?;
    Ok(format!("c=3 ccn=3 (tcn={})", inv.tcn))
}

fn c4_girth_degree() -> Outcome {
    let r = suite(Suite::GirthDegree, None, &opts())?;
    let expected =
        atlas().iter().filter(|a| a.n <= 6 && a.connected && girth(&a.graph).is_none_or(|g| g >= 5)).count() + 1;
    ensure(
        r.summary.checks == expected,
        format!("{} graphs checked, brute-force girth expects {expected}", r.summary.checks),
    )?;
    ensure(r.checks.iter().any(|c| c.graph == "petersen"), "petersen not checked")?;
    Ok(format!("{} graphs with girth >= 5 (incl. petersen)", r.summary.checks))
}

fn c5_cographs() -> Outcome {
    let r = suite(Suite::CographCcn8, None, &opts())?;
    let ours: BTreeSet<_> =
        enumerate_connected_cographs(8).unwrap().iter().map(|g| canonical_code(g).unwrap()).collect();
    let theirs: BTreeSet<_> = cographs_8().iter().map(|g| canonical_code(g).unwrap()).collect();
    ensure(ours == theirs, "order-8 enumeration differs from the ingested list")?;
    ensure(
        r.checks.iter().any(|c| c.claim == "exactly one order-8 class has ccn = 2" && c.pass),
        "census check missing",
    )?;
    Ok(format!("{} cographs, 261 order-8 classes match the ingested list; {}", r.graphs, r.notes.join("; ")))
}

fn c6_extremal() -> Outcome {
    let g = extremal_cograph().map_err(|e| e.to_string())?;
    let n = g.order();
    ensure(n >= 6, format!("|V|={n}"))?;
    ensure(!g.is_planar() && has_k5_or_k33_minor(&g), "planar")?;
    ensure(g.min_degree() >= 3 && g.max_degree() >= 4, format!("δ={} Δ={}", g.min_degree(), g.max_degree()))?;
    ensure(g.is_two_connected().unwrap(), "not 2-connected")?;
    let off: Vec<usize> = (0..n).filter(|&v| !on_induced_cycle(&g, v, 4)).collect();
    ensure(off.is_empty(), format!("vertices off every induced C4: {off:?}"))?;
    Ok(format!("n={n} δ={} Δ={} non-planar, 2-connected, all vertices on induced C4", g.min_degree(), g.max_degree()))
}

fn c7_twins() -> Outcome {
    let r = suite(Suite::TwinOps, Some(CorpusSpec::cographs(2..=7)), &opts())?;
    let seqs = r.checks.iter().filter(|c| c.claim == "twin sequence keeps ccn = 2").count();
    ensure(seqs == 20, format!("{seqs} random sequences"))?;
    Ok(format!("{} checks on {} cographs incl. 20 sequences", r.summary.checks, r.graphs))
}

fn c8_train_chase() -> Outcome {
    let spec = CorpusSpec::new(vec![Source::Internal(1..=6), Source::Cographs(1..=8)]);
    let r = suite(Suite::TrainChase, Some(spec), &RunOptions { trials: 1000, ..opts() })?;
    ensure(r.summary.checks >= 1000, format!("{} triples", r.summary.checks))?;
    Ok(format!("{} triples; {}", r.summary.checks, r.notes.join("; ")))
}

fn c9_pk_bounds() -> Outcome {
    let r = suite(Suite::PkfreeBounds, None, &opts())?;
    Ok(format!("{} checks; {}", r.summary.checks, r.notes.join("; ")))
}

fn c10_planar() -> Outcome {
    let r = suite(Suite::PlanarPkfree, None, &opts())?;
    Ok(format!("{} checks; {}", r.summary.checks, r.notes.join("; ")))
}

fn c11_dodecahedron() -> Outcome {
    suite(Suite::Dodecahedron, None, &opts())?;
    let g = named::dodecahedron();
    ensure(!solve(&g, GameConfig::confine(2).unwrap()).unwrap().cops_win, "2 cops confine")?;
    ensure(solve(&g, GameConfig::confine(3).unwrap()).unwrap().cops_win, "3 cops fail to confine")?;
    Ok("c=3 ccn=3".into())
}

fn c12_searches() -> Outcome {
    let mut parts = Vec::new();
    for target in [SearchTarget::P5freeCcn3, SearchTarget::PlanarCcn3] {
        for corpus in [
            CorpusSpec::internal(1..=6),
            CorpusSpec::new(vec![Source::Graph6(
                concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/atlas_upto7.g6").into(),
            )]),
        ] {
            let label = corpus.to_string();
            let r = run_search(target, Some(corpus), &opts()).map_err(|e| e.to_string())?;
            ensure(r.passed(), format!("{target} on {label}: counterexample reported"))?;
            let note = r.notes.last().cloned().unwrap_or_default();
            ensure(note.starts_with("no counterexample found"), format!("{target}: {note}"))?;
            parts.push(format!("{target} on {label}: {note}"));
        }
    }
    Ok(parts.join("; "))
}

fn c13_oracles() -> Outcome {
    let atlas = atlas();
    let small: Vec<_> = atlas.iter().filter(|a| a.n <= 6 && a.connected).collect();
    for a in &small {
        let cop_win = solve(&a.graph, GameConfig::capture(1).unwrap()).unwrap().cops_win;
        ensure(is_dismantlable(&a.graph) == cop_win, format!("dismantlable vs 1-cop win on {}", a.graph6))?;
        ensure(cop_win == one_cop_wins(&a.graph), format!("solver vs naive 1-cop game on {}", a.graph6))?;
    }
    let mut corpora: Vec<Graph> = atlas.iter().map(|a| a.graph.clone()).collect();
    corpora.extend(cographs_8());
    for g in &corpora {
        ensure(is_cograph(g) == !has_induced_path(g, 4), "is_cograph disagrees with brute-force P4 search")?;
    }
    let mut cographs: Vec<Graph> = (1..=7).flat_map(|n| enumerate_connected_cographs(n).unwrap()).collect();
    cographs.extend(cographs_8());
    let mut pairs = BTreeSet::new();
    let (mut trees, mut canons) = (BTreeSet::new(), BTreeSet::new());
    for g in &cographs {
        let (t, c) = (cotree_code(g).unwrap(), canonical_code(g).unwrap());
        trees.insert(t.clone());
        canons.insert(c.clone());
        pairs.insert((t, c));
    }
    ensure(
        trees.len() == pairs.len() && canons.len() == pairs.len(),
        "cotree and permutation codes are not in bijection",
    )?;
    Ok(format!(
        "{} graphs n<=6 for dismantlability, {} graphs for recognition, {} cograph classes for canonization",
        small.len(),
        corpora.len(),
        pairs.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("order chain on connected graphs n<=6", c1_order_chain, Duration::from_secs(60)),
        ("C4 values", c2_c4, Duration::from_secs(5)),
        ("Petersen c=3 ccn=3", c3_petersen, Duration::from_secs(60)),
        ("ccn >= min degree at girth >= 5", c4_girth_degree, Duration::from_secs(60)),
        ("cograph ccn census", c5_cographs, Duration::from_secs(300)),
        ("extremal cograph necessary conditions", c6_extremal, Duration::from_secs(60)),
        ("twin effects", c7_twins, Duration::from_secs(600)),
        ("train-chasing conclusions", c8_train_chase, Duration::from_secs(300)),
        ("P_k-free trap and capture bounds", c9_pk_bounds, Duration::from_secs(300)),
        ("planar P_k-free graphs avoid ccn = k-2", c10_planar, Duration::from_secs(300)),
        ("dodecahedron c=3 ccn=3", c11_dodecahedron, Duration::from_secs(600)),
        ("conjecture searches", c12_searches, Duration::from_secs(300)),
        ("oracle agreements", c13_oracles, Duration::from_secs(300)),
    ];
    let mut failed = 0;
    for (i, (name, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(d) if took > *budget => Err(format!("over budget ({took:.1?} > {budget:?}); {d}")),
            o => o,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} [{took:.1?}]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{took:.1?}]: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
