use std::fmt;
use std::io::Read;
use std::ops::RangeInclusive;
use std::path::Path;

use crate::cograph::enumerate_connected_cographs;
use crate::error::{Error, Result};
use crate::graph::{
    emit_graph6, enumerate_all_connected_graphs, enumerate_all_graphs, named, parse_graph6_lines, Graph,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// Internal exhaustive enumeration over a range of orders.
    Internal(RangeInclusive<usize>),
    /// Connected cographs over a range of orders.
    Cographs(RangeInclusive<usize>),
    /// graph6 lines from a file, or a single literal graph6 string.
    Graph6(String),
    /// graph6 lines already read (for example from stdin).
    Lines(String),
    Named(Vec<String>),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Filters {
    pub connected: bool,
    pub pk_free: Option<usize>,
    pub planar: Option<bool>,
    pub max_n: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub sources: Vec<Source>,
    pub filters: Filters,
}

#[derive(Debug, Clone)]
pub struct Entry {
    /// graph6 string, or the name for named graphs.
    pub id: String,
    pub graph: Graph,
}

/// Parses `6`, `3..6` or `3..=6`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::InvalidArgument(format!("bad order range `{s}`"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let r = match s.split_once("..") {
        None => {
            let n = num(s)?;
            n..=n
        }
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
    };
    if r.is_empty() {
        return Err(bad());
    }
    Ok(r)
}

fn range_label(r: &RangeInclusive<usize>) -> String {
    if r.start() == r.end() {
        r.start().to_string()
    } else {
        format!("{}..={}", r.start(), r.end())
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .sources
            .iter()
            .map(|s| match s {
                Source::Internal(r) => format!("internal:{}", range_label(r)),
                Source::Cographs(r) => format!("cographs:{}", range_label(r)),
                Source::Graph6(p) => format!("graph6:{p}"),
                Source::Lines(_) => "stdin".to_string(),
                Source::Named(v) => format!("named:{}", v.join(",")),
            })
            .collect();
        write!(f, "{}", parts.join("+"))?;
        let fl = &self.filters;
        if fl.connected {
            write!(f, " connected")?;
        }
        if let Some(k) = fl.pk_free {
            write!(f, " P{k}-free")?;
        }
        match fl.planar {
            Some(true) => write!(f, " planar")?,
            Some(false) => write!(f, " non-planar")?,
            None => {}
        }
        if let Some(m) = fl.max_n {
            write!(f, " n<={m}")?;
        }
        Ok(())
    }
}

impl CorpusSpec {
    pub fn new(sources: Vec<Source>) -> CorpusSpec {
        CorpusSpec { sources, filters: Filters::default() }
    }

    pub fn internal(r: RangeInclusive<usize>) -> CorpusSpec {
        CorpusSpec::new(vec![Source::Internal(r)])
    }

    pub fn cographs(r: RangeInclusive<usize>) -> CorpusSpec {
        CorpusSpec::new(vec![Source::Cographs(r)])
    }

    pub fn named(names: &[&str]) -> CorpusSpec {
        CorpusSpec::new(vec![Source::Named(names.iter().map(|s| s.to_string()).collect())])
    }

    pub fn connected(mut self) -> CorpusSpec {
        self.filters.connected = true;
        self
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }

    /// Reads stdin into a `Lines` source.
    pub fn stdin_source() -> Result<Source> {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::InvalidArgument(format!("reading stdin: {e}")))?;
        Ok(Source::Lines(text))
    }

    /// Graphs in source order, then filtered.
    pub fn resolve(&self) -> Result<Vec<Entry>> {
        let mut out = Vec::new();
        for s in &self.sources {
            match s {
                Source::Internal(r) => {
                    for n in r.clone() {
                        let gs = if self.filters.connected {
                            enumerate_all_connected_graphs(n)?
                        } else {
                            enumerate_all_graphs(n)?
                        };
                        out.extend(gs.into_iter().map(entry));
                    }
                }
                Source::Cographs(r) => {
                    for n in r.clone() {
                        out.extend(enumerate_connected_cographs(n)?.into_iter().map(entry));
                    }
                }
                Source::Graph6(p) => {
                    let text = if Path::new(p).exists() {
                        std::fs::read_to_string(p).map_err(|e| Error::InvalidArgument(format!("reading {p}: {e}")))?
                    } else {
                        p.clone()
                    };
                    out.extend(parse_graph6_lines(&text)?.into_iter().map(entry));
                }
                Source::Lines(text) => out.extend(parse_graph6_lines(text)?.into_iter().map(entry)),
                Source::Named(names) => {
                    for name in names {
                        let g = named::by_name(name).ok_or_else(|| {
                            Error::InvalidArgument(format!(
                                "unknown graph name `{name}` (known: {})",
                                named::NAMES.join(", ")
                            ))
                        })?;
                        out.push(Entry { id: name.clone(), graph: g });
                    }
                }
            }
        }
        let f = &self.filters;
        let mut kept = Vec::with_capacity(out.len());
        for e in out {
            let g = &e.graph;
            if f.max_n.is_some_and(|m| g.order() > m) || (f.connected && !g.is_connected()) {
                continue;
            }
            if let Some(k) = f.pk_free {
                if !g.is_pk_free(k)? {
                    continue;
                }
            }
            if f.planar.is_some_and(|p| g.is_planar() != p) {
                continue;
            }
            kept.push(e);
        }
        Ok(kept)
    }
}

fn entry(g: Graph) -> Entry {
    Entry { id: emit_graph6(&g), graph: g }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("6").unwrap(), 6..=6);
        assert_eq!(parse_range("1..6").unwrap(), 1..=6);
        assert_eq!(parse_range("1..=6").unwrap(), 1..=6);
        assert!(parse_range("6..1").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn resolves_and_filters() {
        let all = CorpusSpec::internal(4..=4).connected().resolve().unwrap();
        assert_eq!(all.len(), 6);
        let mut spec = CorpusSpec::internal(1..=5).connected();
        spec.filters.pk_free = Some(4);
        assert_eq!(spec.resolve().unwrap().len(), 1 + 1 + 2 + 5 + 12);
        let lit = CorpusSpec::new(vec![Source::Graph6("Ch".into())]).resolve().unwrap();
        assert_eq!(lit[0].graph, Graph::path(4).unwrap());
        assert!(CorpusSpec::named(&["nope"]).resolve().is_err());
    }
}
