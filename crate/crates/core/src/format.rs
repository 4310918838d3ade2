//! Text formats.
//!
//! Edge lists: the first non-comment line is `n m`, followed by `m` lines
//! `u v` with 0-based ids. Lines starting with `#` are comments; blank
//! lines are skipped. A comment of the form `# names: a b c` placed before
//! the header attaches one label per vertex.
//!
//! Configurations: one `v count` line per non-sink vertex, with the sink
//! supplied separately, or the JSON object
//! `{"sink": k, "chips": {"v": count}}`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::chipfire::Configuration;
use crate::error::{Error, Result};
use crate::graph::{ArcSet, Digraph};

const NAMES_PREFIX: &str = "names:";

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_usize(token: &str, line: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_error(line, format!("expected a non-negative integer, got {token:?}")))
}

/// Parses the edge-list format.
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut names: Option<Vec<String>> = None;
    let mut arcs = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if header.is_none() {
                if let Some(rest) = comment.strip_prefix(NAMES_PREFIX) {
                    names = Some(rest.split_whitespace().map(str::to_owned).collect());
                }
            }
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(parse_error(
                line_no,
                format!("expected two integers, got {} tokens", tokens.len()),
            ));
        }
        let a = parse_usize(tokens[0], line_no)?;
        let b = parse_usize(tokens[1], line_no)?;
        let Some((n, m)) = header else {
            header = Some((a, b));
            continue;
        };
        if arcs.len() == m {
            return Err(parse_error(line_no, format!("more than the declared {m} arcs")));
        }
        if a >= n || b >= n {
            return Err(parse_error(
                line_no,
                format!("vertex id {} out of range (n = {n})", a.max(b)),
            ));
        }
        if a == b {
            return Err(parse_error(line_no, format!("self-loop at vertex {a}")));
        }
        if !seen.insert((a, b)) {
            return Err(parse_error(line_no, format!("duplicate arc {a} {b}")));
        }
        arcs.push((a, b));
    }

    let (n, m) = header.ok_or_else(|| parse_error(last_line.max(1), "missing \"n m\" header"))?;
    if arcs.len() != m {
        return Err(parse_error(
            last_line.max(1),
            format!("declared {m} arcs, found {}", arcs.len()),
        ));
    }
    let g = Digraph::new(n, arcs)?;
    match names {
        Some(names) => g
            .with_names(names)
            .map_err(|e| parse_error(1, e.to_string())),
        None => Ok(g),
    }
}

/// Writes a digraph in the edge-list format.
pub fn write_digraph(g: &Digraph) -> String {
    write_arcs(g.n(), g.arcs(), g.names())
}

/// Writes the spanning subgraph `G[set]` in the edge-list format.
pub fn write_arc_set(g: &Digraph, set: &ArcSet) -> String {
    write_arcs(g.n(), &g.pairs(set), g.names())
}

fn write_arcs(n: usize, arcs: &[(usize, usize)], names: Option<&[String]>) -> String {
    let mut out = String::new();
    if let Some(names) = names {
        let _ = writeln!(out, "# {NAMES_PREFIX} {}", names.join(" "));
    }
    let _ = writeln!(out, "{n} {}", arcs.len());
    for (u, v) in arcs {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses `v count` lines into a configuration with the given sink.
/// Vertices that are not listed hold zero chips.
pub fn parse_configuration(text: &str, n: usize, sink: usize) -> Result<Configuration> {
    if text.trim_start().starts_with('{') {
        let parsed = parse_configuration_json(text, n)?;
        if parsed.sink() != sink {
            return Err(Error::Precondition(format!(
                "configuration names sink {}, expected {sink}",
                parsed.sink()
            )));
        }
        return Ok(parsed);
    }
    if sink >= n {
        return Err(Error::VertexOutOfRange { vertex: sink, n });
    }
    let mut chips = vec![0u64; n];
    let mut listed = vec![false; n];
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(parse_error(line_no, "expected \"v count\""));
        }
        let v = parse_usize(tokens[0], line_no)?;
        let count: u64 = tokens[1]
            .parse()
            .map_err(|_| parse_error(line_no, format!("bad chip count {:?}", tokens[1])))?;
        if v >= n {
            return Err(parse_error(line_no, format!("vertex id {v} out of range (n = {n})")));
        }
        if v == sink {
            return Err(parse_error(line_no, "the sink carries no chips"));
        }
        if std::mem::replace(&mut listed[v], true) {
            return Err(parse_error(line_no, format!("vertex {v} listed twice")));
        }
        chips[v] = count;
    }
    Configuration::from_vec(sink, chips)
}

pub fn write_configuration(c: &Configuration) -> String {
    let mut out = String::new();
    for (v, count) in c.iter() {
        let _ = writeln!(out, "{v} {count}");
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct ConfigurationJson {
    sink: usize,
    chips: BTreeMap<String, u64>,
}

pub fn configuration_to_json(c: &Configuration) -> serde_json::Value {
    let chips = c.iter().map(|(v, k)| (v.to_string(), k)).collect();
    serde_json::to_value(ConfigurationJson {
        sink: c.sink(),
        chips,
    })
    .expect("configuration serializes")
}

pub fn parse_configuration_json(text: &str, n: usize) -> Result<Configuration> {
    let parsed: ConfigurationJson =
        serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.to_string()))?;
    if parsed.sink >= n {
        return Err(Error::VertexOutOfRange {
            vertex: parsed.sink,
            n,
        });
    }
    let mut chips = vec![0u64; n];
    for (key, count) in parsed.chips {
        let v: usize = key
            .parse()
            .map_err(|_| parse_error(1, format!("bad vertex key {key:?}")))?;
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if v == parsed.sink {
            return Err(parse_error(1, "the sink carries no chips"));
        }
        chips[v] = count;
    }
    Configuration::from_vec(parsed.sink, chips)
}
