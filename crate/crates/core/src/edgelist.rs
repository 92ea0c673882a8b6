//! Plain-text edge lists: a header line `n m`, then `m` lines `u v` with
//! 0-based indices. `#` starts a comment; blank lines are ignored.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let bad = || Error::Parse { line: line_no, message: format!("expected two integers, got `{line}`") };
    let a = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let b = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    if it.next().is_some() {
        return Err(bad());
    }
    Ok((a, b))
}

/// Parse every graph in `text`; records follow each other back to back.
pub fn read_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let mut lines = content_lines(text);
    let mut graphs = Vec::new();
    while let Some((line_no, header)) = lines.next() {
        let (n, m) = parse_pair(line_no, header)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (ln, line) = lines.next().ok_or(Error::Parse {
                line: line_no,
                message: format!("header promised {m} edges, input ended after {}", edges.len()),
            })?;
            edges.push(parse_pair(ln, line)?);
        }
        graphs.push(Graph::new(n, &edges)?);
    }
    Ok(graphs)
}

/// Parse exactly one graph.
pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut graphs = read_edge_lists(text)?;
    match graphs.len() {
        1 => Ok(graphs.pop().unwrap()),
        0 => Err(Error::Parse { line: 1, message: "no graph in input".into() }),
        k => Err(Error::Parse { line: 1, message: format!("expected one graph, found {k}") }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writer_sorts_edges() {
        let g = Graph::new(4, &[(3, 2), (0, 1), (2, 0)]).unwrap();
        assert_eq!(write_edge_list(&g), "4 3\n0 1\n0 2\n2 3\n");
    }

    #[test]
    fn reader_skips_comments() {
        let text = "# triangle\n3 3\n0 1 # first\n\n1 2\n2 0\n";
        let g = read_edge_list(text).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn reader_reports_errors() {
        assert!(matches!(read_edge_list("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(read_edge_list("2 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_edge_list("2 1\n0 0\n"), Err(Error::SelfLoop(0))));
        assert!(matches!(read_edge_list(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn multiple_records() {
        let text = "1 0\n\n2 1\n0 1\n";
        let gs = read_edge_lists(text).unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(read_edge_list(&write_edge_list(&gs[1])).unwrap(), gs[1]);
    }
}
