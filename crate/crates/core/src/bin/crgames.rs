use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crgames::chase::{train_chase, SolverEvader};
use crgames::cograph::{enumerate_connected_cographs, to_cotree};
use crgames::game::{play, solve, GameConfig, Objective, TableCops, TableRobber, Variant};
use crgames::graph::{emit_graph6, enumerate_all_connected_graphs, enumerate_all_graphs};
use crgames::harness::{
    invariants, par_map, parse_range, run_search, run_suite, CorpusSpec, Entry, RunOptions, SearchTarget, Source,
    Suite, DEFAULT_SEED,
};
use crgames::Error;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Parser)]
#[command(name = "crgames", version, about = "Exact cops-and-robber solver and claim verifier")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve one game configuration on every corpus graph.
    Solve {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long)]
        cops: usize,
        #[arg(long, default_value = "capture")]
        objective: Objective,
        #[arg(long, default_value = "all-active")]
        variant: Variant,
        /// Include an optimal play transcript and a train-chase trace.
        #[arg(long)]
        dump_trace: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// c, tcn and ccn with optimal round counts.
    Invariants {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Add the cotree of each cograph.
        #[arg(long)]
        cotree: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run a named verification suite.
    Verify {
        suite: Suite,
        #[command(flatten)]
        corpus: CorpusArgs,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Search a corpus for counterexamples to a ccn conjecture.
    Search {
        target: SearchTarget,
        #[command(flatten)]
        corpus: CorpusArgs,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Emit graph6 lines.
    Gen {
        what: GenWhat,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenWhat {
    Cographs,
    All,
}

#[derive(Args, Default)]
struct CorpusArgs {
    /// All graphs of the given order, or a range such as `1..6`.
    #[arg(long, value_name = "N|A..B")]
    internal: Option<String>,
    /// Connected cographs of the given order or range.
    #[arg(long, value_name = "N|A..B")]
    cographs: Option<String>,
    /// A graph6 file, or a literal graph6 string.
    #[arg(long, value_name = "PATH|G6")]
    graph6: Vec<String>,
    /// Read graph6 lines from stdin.
    #[arg(long)]
    stdin: bool,
    /// Comma-separated named graphs.
    #[arg(long, value_delimiter = ',')]
    named: Vec<String>,
    #[arg(long)]
    connected: bool,
    #[arg(long, value_name = "K")]
    pk_free: Option<usize>,
    #[arg(long, conflicts_with = "non_planar")]
    planar: bool,
    #[arg(long)]
    non_planar: bool,
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads; 0 picks the core count.
    #[arg(long, env = "CRG_JOBS", default_value_t = 0)]
    jobs: usize,
    /// Seeded trials for randomised suites.
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Record wall time in the report (breaks byte-identity across runs).
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct OutArgs {
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

impl CorpusArgs {
    fn spec(&self) -> crgames::Result<CorpusSpec> {
        let mut sources = Vec::new();
        if let Some(r) = &self.internal {
            sources.push(Source::Internal(parse_range(r)?));
        }
        if let Some(r) = &self.cographs {
            sources.push(Source::Cographs(parse_range(r)?));
        }
        sources.extend(self.graph6.iter().cloned().map(Source::Graph6));
        if self.stdin {
            sources.push(CorpusSpec::stdin_source()?);
        }
        if !self.named.is_empty() {
            sources.push(Source::Named(self.named.clone()));
        }
        let mut spec = CorpusSpec::new(sources);
        spec.filters.connected = self.connected;
        spec.filters.pk_free = self.pk_free;
        spec.filters.planar = match (self.planar, self.non_planar) {
            (true, _) => Some(true),
            (_, true) => Some(false),
            _ => None,
        };
        spec.filters.max_n = self.max_n;
        Ok(spec)
    }

    fn required(&self) -> crgames::Result<CorpusSpec> {
        let spec = self.spec()?;
        if spec.is_empty() {
            return Err(Error::InvalidArgument(
                "no graphs given; use --internal, --cographs, --graph6, --stdin or --named".into(),
            ));
        }
        Ok(spec)
    }

    fn optional(&self) -> crgames::Result<Option<CorpusSpec>> {
        let spec = self.spec()?;
        Ok((!spec.is_empty()).then_some(spec))
    }
}

impl RunArgs {
    fn options(&self) -> RunOptions {
        RunOptions { seed: self.seed, jobs: self.jobs, trials: self.trials, timing: self.timing }
    }
}

impl OutArgs {
    fn emit(&self, text: &str) -> crgames::Result<()> {
        let io = |e: std::io::Error| Error::InvalidArgument(format!("writing output: {e}"));
        match &self.out {
            Some(p) => std::fs::write(p, text).map_err(io),
            None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(io),
        }
    }
}

fn jobs_from_env() -> usize {
    std::env::var("CRG_JOBS").ok().and_then(|s| s.parse().ok()).unwrap_or(0)
}

fn pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn cmd_solve(
    corpus: &CorpusArgs,
    cops: usize,
    objective: Objective,
    variant: Variant,
    dump_trace: bool,
) -> crgames::Result<String> {
    let cfg = GameConfig::new(cops, objective, variant)?;
    let entries = corpus.required()?.resolve()?;
    let rows = par_map(jobs_from_env(), &entries, |e| -> crgames::Result<serde_json::Value> {
        let out = solve(&e.graph, cfg)?;
        let mut row = json!({ "graph": e.id, "n": e.graph.order(), "result": out.summary() });
        if dump_trace {
            let mut tc = TableCops(&out);
            let mut tr = TableRobber(&out);
            let bound = out.optimal_rounds.unwrap_or(0).max(e.graph.order() as u32) + 1;
            let transcript = play(&e.graph, objective, &mut tc, &mut tr, bound)?;
            row["play"] = serde_json::to_value(&transcript).expect("transcript");
            let capture = solve(&e.graph, GameConfig::new(cops, Objective::Capture, variant)?)?;
            let v1 = out.best_initial_placement.as_ref().map_or(0, |p| p[0]);
            let trace = train_chase(&e.graph, v1, cops, &mut SolverEvader(&capture))?;
            row["chase"] = trace.to_json();
        }
        Ok(row)
    });
    let rows = rows.into_iter().collect::<crgames::Result<Vec<_>>>()?;
    Ok(pretty(
        &json!({ "schema": 1, "command": "solve", "config": cfg_json(cops, objective, variant), "results": rows }),
    ))
}

fn cfg_json(cops: usize, objective: Objective, variant: Variant) -> serde_json::Value {
    json!({ "cops": cops, "objective": objective, "variant": variant })
}

#[derive(Serialize)]
struct InvariantRow {
    graph: String,
    n: usize,
    c: usize,
    c_rounds: u32,
    tcn: usize,
    tcn_rounds: u32,
    ccn: usize,
    ccn_rounds: u32,
    order_chain: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    cotree: Option<String>,
}

fn invariant_row(e: &Entry, cotree: bool) -> crgames::Result<InvariantRow> {
    let inv = invariants(&e.graph)?;
    Ok(InvariantRow {
        graph: e.id.clone(),
        n: e.graph.order(),
        c: inv.c,
        c_rounds: inv.c_rounds,
        tcn: inv.tcn,
        tcn_rounds: inv.tcn_rounds,
        ccn: inv.ccn,
        ccn_rounds: inv.ccn_rounds,
        order_chain: inv.order_chain_holds(),
        cotree: if cotree { Some(to_cotree(&e.graph).map_or_else(|_| "-".into(), |t| t.to_string())) } else { None },
    })
}

fn cmd_invariants(corpus: &CorpusArgs, format: Format, cotree: bool) -> crgames::Result<String> {
    let entries = corpus.required()?.resolve()?;
    let rows = par_map(jobs_from_env(), &entries, |e| invariant_row(e, cotree))
        .into_iter()
        .collect::<crgames::Result<Vec<_>>>()?;
    Ok(match format {
        Format::Json => pretty(&json!({ "schema": 1, "command": "invariants", "rows": rows })),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let csv_err = |e: csv::Error| Error::InvalidArgument(format!("writing csv: {e}"));
            let mut header =
                vec!["graph", "n", "c", "c_rounds", "tcn", "tcn_rounds", "ccn", "ccn_rounds", "order_chain"];
            if cotree {
                header.push("cotree");
            }
            w.write_record(&header).map_err(csv_err)?;
            for r in rows {
                let mut rec = vec![
                    r.graph,
                    r.n.to_string(),
                    r.c.to_string(),
                    r.c_rounds.to_string(),
                    r.tcn.to_string(),
                    r.tcn_rounds.to_string(),
                    r.ccn.to_string(),
                    r.ccn_rounds.to_string(),
                    r.order_chain.to_string(),
                ];
                rec.extend(r.cotree);
                w.write_record(&rec).map_err(csv_err)?;
            }
            String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 fields")
        }
    })
}

fn cmd_gen(what: GenWhat, n: usize, connected: bool) -> crgames::Result<String> {
    let graphs = match what {
        GenWhat::All if connected => enumerate_all_connected_graphs(n)?,
        GenWhat::All => enumerate_all_graphs(n)?,
        GenWhat::Cographs if connected => enumerate_connected_cographs(n)?,
        GenWhat::Cographs => {
            return Err(Error::InvalidArgument("only connected cographs are generated; pass --connected".into()))
        }
    };
    Ok(graphs.iter().map(|g| emit_graph6(g) + "\n").collect())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::StateSpaceGuard { .. }
        | Error::OrderLimit { .. }
        | Error::TooManyCops(_)
        | Error::NumberAboveLimit(_) => EXIT_GUARD,
        Error::TooManyVertices(_) => EXIT_GUARD,
        _ => EXIT_USAGE,
    }
}

fn run(cli: Cli) -> crgames::Result<u8> {
    match cli.cmd {
        Cmd::Solve { corpus, cops, objective, variant, dump_trace, out } => {
            out.emit(&cmd_solve(&corpus, cops, objective, variant, dump_trace)?)?;
            Ok(0)
        }
        Cmd::Invariants { corpus, format, cotree, out } => {
            out.emit(&cmd_invariants(&corpus, format, cotree)?)?;
            Ok(0)
        }
        Cmd::Verify { suite, corpus, run, out } => {
            let report = run_suite(suite, corpus.optional()?, &run.options())?;
            out.emit(&(report.to_json() + "\n"))?;
            eprintln!("{}: {} of {} checks passed", suite, report.summary.passed, report.summary.checks);
            Ok(if report.passed() { 0 } else { EXIT_FAIL })
        }
        Cmd::Search { target, corpus, run, out } => {
            let report = run_search(target, corpus.optional()?, &run.options())?;
            out.emit(&(report.to_json() + "\n"))?;
            for n in &report.notes {
                eprintln!("{target}: {n}");
            }
            Ok(if report.passed() { 0 } else { EXIT_FAIL })
        }
        Cmd::Gen { what, n, connected, out } => {
            out.emit(&cmd_gen(what, n, connected)?)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
