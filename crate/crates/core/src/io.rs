//! Reading and writing graphs.
//!
//! Two formats, chosen by file extension:
//!
//! * plain text (any extension but `.json`, conventionally `.el`): a header
//!   line `n m`, then `m` lines `u v` with 0-based vertex ids.  Tokens are
//!   whitespace-separated and `#` starts a comment that runs to the end of
//!   the line.
//! * JSON (`.json`): `{"n": N, "edges": [[u, v], ...]}`.
//!
//! Writers emit a canonical form — edges sorted lexicographically, one
//! format-defined layout — so that write → read → write is bit-identical.
//! Only canonically labeled graphs (ids exactly `0..n-1`, as all generators
//! produce) can be serialized; induced subgraphs keep their parent's ids
//! and must be relabeled by the caller first.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::{Error, Result};

/// Strip the comment tail and split a line into tokens.
fn tokens(line: &str) -> Vec<&str> {
    let body = line.split('#').next().unwrap_or("");
    body.split_whitespace().collect()
}

fn parse_number<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a nonnegative integer, got {tok:?}"),
    })
}

/// Parse the plain-text format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, tokens(l)))
        .filter(|(_, t)| !t.is_empty());

    let Some((header_line, header)) = data.next() else {
        return Err(Error::Parse {
            line: 1,
            msg: "missing header line `n m`".to_string(),
        });
    };
    if header.len() != 2 {
        return Err(Error::Parse {
            line: header_line,
            msg: format!("header must be `n m`, got {} tokens", header.len()),
        });
    }
    let n: usize = parse_number(header[0], header_line)?;
    let m: usize = parse_number(header[1], header_line)?;

    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, toks) in data {
        last_line = line;
        if toks.len() != 2 {
            return Err(Error::Parse {
                line,
                msg: format!("edge lines hold exactly `u v`, got {} tokens", toks.len()),
            });
        }
        if edges.len() == m {
            return Err(Error::Parse {
                line,
                msg: format!("more than the {m} edges announced in the header"),
            });
        }
        let u: u32 = parse_number(toks[0], line)?;
        let v: u32 = parse_number(toks[1], line)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("header announced {m} edges, found {}", edges.len()),
        });
    }
    Graph::build(n, &edges)
}

fn require_canonical_ids(g: &Graph) -> Result<()> {
    let contiguous = g
        .vertices()
        .last()
        .is_none_or(|&v| v.0 as usize == g.n() - 1);
    if contiguous {
        Ok(())
    } else {
        Err(Error::InvalidParameter(
            "only graphs with ids 0..n-1 can be serialized; relabel first".to_string(),
        ))
    }
}

/// Render the plain-text format: header, then lexicographically sorted
/// edges, one per line.
pub fn render_edge_list(g: &Graph) -> Result<String> {
    require_canonical_ids(g)?;
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<(u32, u32)>,
}

/// Parse the JSON format.
pub fn parse_json_graph(text: &str) -> Result<Graph> {
    let parsed: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    Graph::build(parsed.n, &parsed.edges)
}

/// Render the JSON format (single line, edges sorted lexicographically).
pub fn render_json_graph(g: &Graph) -> Result<String> {
    require_canonical_ids(g)?;
    let doc = JsonGraph {
        n: g.n(),
        edges: g.edges().into_iter().map(|(u, v)| (u.0, v.0)).collect(),
    };
    Ok(serde_json::to_string(&doc).expect("graph serialization cannot fail"))
}

fn is_json_path(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "json")
}

/// Read a graph file, picking the format from the extension.
pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    if is_json_path(path) {
        parse_json_graph(&text)
    } else {
        parse_edge_list(&text)
    }
}

/// Write a graph file in canonical form, picking the format from the
/// extension.
pub fn write_graph(path: &Path, g: &Graph) -> Result<()> {
    let text = if is_json_path(path) {
        let mut t = render_json_graph(g)?;
        t.push('\n');
        t
    } else {
        render_edge_list(g)?
    };
    std::fs::write(path, text)?;
    Ok(())
}
