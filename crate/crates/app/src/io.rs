use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use flexi_core::{build_graph, Graph, GraphError};
use log::info;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Open { path: String, source: io::Error },
    #[error("read error: {0}")]
    Read(#[from] io::Error),
    #[error("line {line}: expected two node ids, got {text:?}")]
    Malformed { line: usize, text: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses a whitespace separated edge list, one edge per line.
///
/// Blank lines and lines starting with `#` or `%` are skipped and columns
/// after the second are ignored, so KONECT and SNAP files load as they are.
/// Self-loops and repeated edges are dropped and reported through the log.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<Graph, InputError> {
    let mut pairs = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') || text.starts_with('%') {
            continue;
        }
        let mut cols = text.split_whitespace();
        match (cols.next(), cols.next()) {
            (Some(a), Some(b)) => pairs.push((a.to_string(), b.to_string())),
            _ => {
                return Err(InputError::Malformed {
                    line: idx + 1,
                    text: text.to_string(),
                })
            }
        }
    }
    let (graph, summary) = build_graph(pairs)?;
    if summary.self_loops > 0 || summary.duplicate_edges > 0 {
        info!(
            "dropped {} self-loops and {} duplicate edges",
            summary.self_loops, summary.duplicate_edges
        );
    }
    Ok(graph)
}

pub fn load_edge_list(path: &Path) -> Result<Graph, InputError> {
    let file = File::open(path).map_err(|source| InputError::Open {
        path: path.display().to_string(),
        source,
    })?;
    parse_edge_list(BufReader::new(file))
}

/// Writes one `u v` line per edge using node labels.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> io::Result<()> {
    writeln!(out, "% {} nodes, {} edges", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", g.label(u), g.label(v))?;
    }
    Ok(())
}
