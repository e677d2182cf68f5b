//! Line-oriented text formats for graphs and morphisms, plus DOT export.
//!
//! Graph files: one declaration per line, `#` starts a comment, blank lines
//! ignored. `v <label>` declares a vertex, `e <label> <v1> <v2>` an edge
//! (`v1 == v2` makes a loop). Input labels match `[A-Za-z0-9_.-]+`; graphs
//! produced by constructions may carry richer labels, so printing is a
//! superset of what parsing accepts.
//!
//! Morphism files: optional `dom <path>` / `cod <path>` headers naming the
//! endpoint graph files, then one `p <src> <dst>` line per domain part with
//! parts written `v:<label>` or `e:<label>`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, PartId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn valid_label(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '-'))
}

fn check_label(line: usize, s: &str) -> Result<(), ParseError> {
    if valid_label(s) {
        Ok(())
    } else {
        Err(err(line, format!("bad label `{s}` (allowed: [A-Za-z0-9_.-]+)")))
    }
}

fn graph_err(line: usize, e: GraphError) -> ParseError {
    err(line, e.to_string())
}

/// Iterates (1-based line number, payload before any `#`, trimmed),
/// skipping blanks and comment-only lines.
fn payload_lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

pub fn parse_graph(src: &str) -> Result<Graph, ParseError> {
    let mut g = Graph::new();
    for (line, decl) in payload_lines(src) {
        let mut tokens = decl.split_whitespace();
        match tokens.next() {
            Some("v") => {
                let label = tokens
                    .next()
                    .ok_or_else(|| err(line, "`v` needs a label"))?;
                check_label(line, label)?;
                if tokens.next().is_some() {
                    return Err(err(line, "trailing tokens after vertex declaration"));
                }
                g.add_vertex(label).map_err(|e| graph_err(line, e))?;
            }
            Some("e") => {
                let label = tokens
                    .next()
                    .ok_or_else(|| err(line, "`e` needs a label and two endpoints"))?;
                let x = tokens
                    .next()
                    .ok_or_else(|| err(line, "`e` needs two endpoints"))?;
                let y = tokens
                    .next()
                    .ok_or_else(|| err(line, "`e` needs two endpoints"))?;
                for t in [label, x, y] {
                    check_label(line, t)?;
                }
                if tokens.next().is_some() {
                    return Err(err(line, "trailing tokens after edge declaration"));
                }
                g.add_edge(label, x, y).map_err(|e| graph_err(line, e))?;
            }
            Some(other) => {
                return Err(err(line, format!("unknown declaration `{other}`")));
            }
            None => unreachable!("blank lines are filtered"),
        }
    }
    Ok(g)
}

/// Prints a graph in the text format: vertices then edges, sorted by label.
pub fn print_graph(g: &Graph) -> String {
    let mut out = String::new();
    for v in g.vertex_labels() {
        writeln!(out, "v {v}").unwrap();
    }
    for (e, inc) in g.edges() {
        let (x, y) = inc.ends();
        writeln!(out, "e {e} {x} {y}").unwrap();
    }
    out
}

/// The parsed pieces of a morphism file: part pairs plus any `dom`/`cod`
/// header paths, to be resolved by the caller.
#[derive(Debug, Clone, Default)]
pub struct MorphismFile {
    pub dom_path: Option<String>,
    pub cod_path: Option<String>,
    pub pairs: Vec<(PartId, PartId)>,
}

fn parse_part(line: usize, token: &str) -> Result<PartId, ParseError> {
    let (kind, label) = token
        .split_once(':')
        .ok_or_else(|| err(line, format!("part `{token}` must look like v:<label> or e:<label>")))?;
    match kind {
        "v" => Ok(PartId::vertex(label)),
        "e" => Ok(PartId::edge(label)),
        other => Err(err(line, format!("unknown part kind `{other}` (expected v or e)"))),
    }
}

pub fn parse_morphism(src: &str) -> Result<MorphismFile, ParseError> {
    let mut file = MorphismFile::default();
    for (line, decl) in payload_lines(src) {
        let mut tokens = decl.split_whitespace();
        match tokens.next() {
            Some("dom") => {
                let path = tokens.next().ok_or_else(|| err(line, "`dom` needs a path"))?;
                file.dom_path = Some(path.to_owned());
            }
            Some("cod") => {
                let path = tokens.next().ok_or_else(|| err(line, "`cod` needs a path"))?;
                file.cod_path = Some(path.to_owned());
            }
            Some("p") => {
                let src_part = tokens.next().ok_or_else(|| err(line, "`p` needs two parts"))?;
                let dst_part = tokens.next().ok_or_else(|| err(line, "`p` needs two parts"))?;
                if tokens.next().is_some() {
                    return Err(err(line, "trailing tokens after part mapping"));
                }
                file.pairs
                    .push((parse_part(line, src_part)?, parse_part(line, dst_part)?));
            }
            Some(other) => {
                return Err(err(line, format!("unknown declaration `{other}`")));
            }
            None => unreachable!("blank lines are filtered"),
        }
    }
    Ok(file)
}

/// Prints the body of a morphism: one `p` line per domain part, sorted.
pub fn print_morphism(m: &crate::morphism::Morphism) -> String {
    let mut out = String::new();
    for (p, q) in m.part_map() {
        writeln!(out, "p {p} {q}").unwrap();
    }
    out
}

fn dot_quote(s: &str) -> String {
    let escaped = s.replace('\\', "\\\\").replace('"', "\\\"");
    format!("\"{escaped}\"")
}

/// DOT export: every vertex a node, every edge its own undirected statement
/// carrying the edge label, so parallel edges survive the export.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in g.vertex_labels() {
        writeln!(out, "  {};", dot_quote(v)).unwrap();
    }
    for (e, inc) in g.edges() {
        let (x, y) = inc.ends();
        writeln!(
            out,
            "  {} -- {} [label={}];",
            dot_quote(x),
            dot_quote(y),
            dot_quote(e)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
