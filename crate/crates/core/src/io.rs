//! Parsing of the graph, forest and matrix file formats.
//!
//! Graphs come either as plain text — a first line `n`, then one `i j` edge
//! per non-empty line — or as JSON `{"n": 4, "edges": [[1,2], [3,4]]}`.
//! A forest override uses the same shapes.  Rational matrices are JSON
//! `{"n": 2, "entries": [["1", "1/2"], ["1/2", "1"]]}`.

use crate::graph::{Forest, Graph};
use crate::oracle::{parse_rational, RationalMatrix};
use crate::{Error, Result};

/// Parses a graph from either supported format, keyed on the first
/// non-whitespace byte.
pub fn parse_graph(input: &str) -> Result<Graph> {
    let (n, edges) = parse_vertex_edges(input)?;
    Graph::new(n, edges)
}

/// Parses a forest override for a graph from the same formats.
pub fn parse_forest(graph: &Graph, input: &str) -> Result<Forest> {
    let (n, edges) = parse_vertex_edges(input)?;
    if n != graph.n() {
        return Err(Error::invalid(format!(
            "forest file is on {n} vertices, the graph on {}",
            graph.n()
        )));
    }
    Forest::from_edges(graph, edges)
}

fn parse_vertex_edges(input: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    if input.trim_start().starts_with('{') {
        parse_vertex_edges_json(input)
    } else {
        parse_vertex_edges_text(input)
    }
}

fn parse_vertex_edges_text(input: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = raw.trim();
        let lineno = idx + 1;
        if line.is_empty() {
            continue;
        }
        match n {
            None => {
                n = Some(line.parse().map_err(|_| {
                    Error::parse(lineno, format!("expected the vertex count, found {line:?}"))
                })?);
            }
            Some(_) => {
                let mut parts = line.split_whitespace();
                let a = parts
                    .next()
                    .and_then(|p| p.parse::<usize>().ok())
                    .ok_or_else(|| Error::parse(lineno, format!("expected `i j`, found {line:?}")))?;
                let b = parts
                    .next()
                    .and_then(|p| p.parse::<usize>().ok())
                    .ok_or_else(|| Error::parse(lineno, format!("expected `i j`, found {line:?}")))?;
                if parts.next().is_some() {
                    return Err(Error::parse(lineno, "trailing tokens after the edge"));
                }
                edges.push((a, b));
            }
        }
    }
    let n = n.ok_or_else(|| Error::parse(1, "empty graph file"))?;
    Ok((n, edges))
}

fn parse_vertex_edges_json(input: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let value: serde_json::Value = serde_json::from_str(input)
        .map_err(|e| Error::parse(e.line(), format!("invalid JSON: {e}")))?;
    let n = value
        .get("n")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| Error::parse(1, "missing integer field \"n\""))? as usize;
    let mut edges = Vec::new();
    if let Some(list) = value.get("edges") {
        let list = list
            .as_array()
            .ok_or_else(|| Error::parse(1, "\"edges\" must be an array"))?;
        for (idx, pair) in list.iter().enumerate() {
            let pair = pair
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::parse(1, format!("edge {idx} must be a pair")))?;
            let a = pair[0]
                .as_u64()
                .ok_or_else(|| Error::parse(1, format!("edge {idx} has a bad endpoint")))?;
            let b = pair[1]
                .as_u64()
                .ok_or_else(|| Error::parse(1, format!("edge {idx} has a bad endpoint")))?;
            edges.push((a as usize, b as usize));
        }
    }
    Ok((n, edges))
}

/// Parses a rational matrix from its JSON shape.
pub fn parse_rational_matrix(input: &str) -> Result<RationalMatrix> {
    let value: serde_json::Value = serde_json::from_str(input)
        .map_err(|e| Error::parse(e.line(), format!("invalid JSON: {e}")))?;
    let n = value
        .get("n")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| Error::parse(1, "missing integer field \"n\""))? as usize;
    let rows = value
        .get("entries")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::parse(1, "missing array field \"entries\""))?;
    if rows.len() != n {
        return Err(Error::parse(1, format!("expected {n} rows, found {}", rows.len())));
    }
    let mut entries = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .filter(|v| v.len() == n)
            .ok_or_else(|| Error::parse(1, format!("row {r} must have {n} entries")))?;
        for cell in row {
            let s = cell
                .as_str()
                .ok_or_else(|| Error::parse(1, format!("row {r} holds a non-string entry")))?;
            entries.push(parse_rational(s)?);
        }
    }
    RationalMatrix::new(n, entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let g = parse_graph("3\n1 2\n2 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert!(g.has_edge(1, 2) && g.has_edge(2, 3) && !g.has_edge(1, 3));

        let g = parse_graph("  4  \n\n1 4\n").unwrap();
        assert_eq!(g.n(), 4);
    }

    #[test]
    fn json_graphs() {
        let g = parse_graph(r#"{"n": 3, "edges": [[1,2],[1,3]]}"#).unwrap();
        assert_eq!(g.edge_count(), 2);
        let g = parse_graph(r#"{"n": 2}"#).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn diagnostics_carry_line_numbers() {
        match parse_graph("3\n1 x\n") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("expected a line-2 diagnostic, got {other:?}"),
        }
        match parse_graph("") {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("expected a line-1 diagnostic, got {other:?}"),
        }
        match parse_graph("3\n1 2 9\n") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("expected a line-2 diagnostic, got {other:?}"),
        }
        assert!(parse_graph("2\n1 3\n").is_err()); // out of range
    }

    #[test]
    fn forest_override() {
        let g = parse_graph("3\n1 2\n2 3\n1 3\n").unwrap();
        let t = parse_forest(&g, "3\n1 2\n1 3\n").unwrap();
        assert_eq!(t.edges().len(), 2);
        assert!(parse_forest(&g, "4\n1 2\n").is_err());
        assert!(parse_forest(&g, "3\n1 2\n").is_err()); // not spanning
    }

    #[test]
    fn rational_matrices() {
        let m =
            parse_rational_matrix(r#"{"n": 2, "entries": [["1", "1/2"], ["1/2", "1"]]}"#).unwrap();
        assert!(m.is_symmetric());
        assert!(parse_rational_matrix(r#"{"n": 2, "entries": [["1"]]}"#).is_err());
    }
}
