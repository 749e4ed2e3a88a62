use super::{Graph, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

/// Parses one graph6 line. A leading `>>graph6<<` and trailing whitespace are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("invalid character 0x{bad:02x}")));
    }
    let (&head, payload) = bytes.split_first().ok_or_else(|| Error::Graph6("empty input".into()))?;
    if head == 126 {
        return Err(Error::Graph6("orders above 62 are not supported".into()));
    }
    let n = (head - 63) as usize;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if payload.len() < need {
        return Err(Error::Graph6(format!("truncated payload: {} of {need} bytes", payload.len())));
    }
    if payload.len() > need {
        return Err(Error::Graph6(format!("{} trailing bytes after payload", payload.len() - need)));
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Parses every non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, l)| parse_graph6(l).map_err(|e| Error::Graph6(format!("line {}: {e}", i + 1))))
        .collect()
}

/// Canonical graph6 encoding without header or newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = vec![(n as u8) + 63];
    let mut cur = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            cur = (cur << 1) | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(cur + 63);
                cur = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((cur << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ascii")
}
