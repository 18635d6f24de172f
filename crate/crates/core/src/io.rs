//! Text and JSON file formats: edge lists, vectors and weights.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// Parses either the edge-list text form or the `{"n", "edges"}` JSON form.
///
/// Text form: the first non-comment line is `n m`, followed by exactly `m`
/// lines `u v`. Lines starting with `#` and blank lines are ignored.
pub fn parse_graph(src: &str) -> Result<Graph> {
    if src.trim_start().starts_with('{') {
        let g: GraphJson = serde_json::from_str(src)?;
        return Graph::new(g.n, g.edges.into_iter().map(|[u, v]| (u, v)));
    }
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing \"n m\" header".into(),
    })?;
    let [n, m] = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        if edges.len() == m {
            return Err(Error::Parse { line, msg: format!("more than {m} edge lines") });
        }
        let [u, v] = parse_pair(line, text)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse { line, msg: format!("expected two integers, got {text:?}") });
    }
    let mut out = [0usize; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f
            .parse()
            .map_err(|_| Error::Parse { line, msg: format!("not a nonnegative integer: {f:?}") })?;
    }
    Ok(out)
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    parse_graph(&fs::read_to_string(path)?)
}

pub fn graph_to_json(g: &Graph) -> String {
    let j = GraphJson { n: g.n(), edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect() };
    serde_json::to_string(&j).expect("graph JSON is serializable")
}

pub fn graph_to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// One real per line; blank lines and `#` comments are skipped.
pub fn parse_vector(src: &str) -> Result<Vec<f64>> {
    src.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(line, l)| {
            l.parse::<f64>()
                .map_err(|_| Error::Parse { line, msg: format!("not a real number: {l:?}") })
        })
        .collect()
}

pub fn read_vector(path: impl AsRef<Path>) -> Result<Vec<f64>> {
    parse_vector(&fs::read_to_string(path)?)
}
