//! The plain-text multigraph format.
//!
//! ```text
//! # comment
//! n m
//! u v        (m lines, 0 <= u < v < n, one line per edge copy)
//! ```

use super::{MultiGraph, VertexId};
use crate::error::{Error, Result};

/// Parses the text format. Edge ids follow line order; edge lines may come
/// in any order and either endpoint first.
pub fn parse_graph(text: &str) -> Result<MultiGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut g = MultiGraph::new();
    let mut seen = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::parse(line_no, format!("expected two integers, found {line:?}")));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(line_no, format!("not a non-negative integer: {s:?}")))
        };
        let (a, b) = (parse(fields[0])?, parse(fields[1])?);
        match header {
            None => {
                header = Some((a, b));
                g = MultiGraph::with_vertices(a);
            }
            Some((n, m)) => {
                if seen == m {
                    return Err(Error::parse(line_no, format!("more than the declared {m} edges")));
                }
                if a >= n || b >= n {
                    return Err(Error::parse(line_no, format!("endpoint out of range 0..{n}")));
                }
                if a == b {
                    return Err(Error::parse(line_no, format!("loop at vertex {a}")));
                }
                g.add_edge(VertexId(a as u32), VertexId(b as u32))
                    .map_err(|e| Error::parse(line_no, e.to_string()))?;
                seen += 1;
            }
        }
    }
    match header {
        None => Err(Error::parse(1, "missing `n m` header")),
        Some((_, m)) if seen != m => Err(Error::parse(
            text.lines().count().max(1),
            format!("declared {m} edges but found {seen}"),
        )),
        Some(_) => Ok(g),
    }
}

/// Writes the text format. Vertices are renumbered `0..n` in ascending id
/// order; edge lines are sorted lexicographically.
pub fn write_graph(g: &MultiGraph) -> String {
    let (c, _) = g.compacted();
    let mut lines: Vec<(u32, u32)> = c.edges().map(|(_, u, v)| (u.0, v.0)).collect();
    lines.sort_unstable();
    let mut out = format!("{} {}\n", c.vertex_count(), c.edge_count());
    for (u, v) in lines {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_comments_blanks_and_parallel_edges() {
        let g = parse_graph("# a double edge\n\n2 2\n1 0\n0 1 # again\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.multiplicity(VertexId(0), VertexId(1)), 2);
    }

    #[test]
    fn reports_line_numbers() {
        match parse_graph("3 2\n0 1\n0 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_graph("2 1\n0 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("2 1\n0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_graph("2 2\n0 1\n").is_err());
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn writer_sorts_edges() {
        let g = MultiGraph::from_edges(3, &[(1, 2), (0, 2), (0, 1)]).unwrap();
        assert_eq!(write_graph(&g), "3 3\n0 1\n0 2\n1 2\n");
    }

    proptest! {
        #[test]
        fn canonical_text_round_trips(n in 2usize..8, raw in prop::collection::vec((0u32..8, 0u32..8), 0..16)) {
            let edges: Vec<(u32, u32)> = raw
                .into_iter()
                .map(|(a, b)| (a % n as u32, b % n as u32))
                .filter(|(a, b)| a != b)
                .collect();
            let g = MultiGraph::from_edges(n, &edges).unwrap();
            let text = write_graph(&g);
            let back = parse_graph(&text).unwrap();
            prop_assert_eq!(write_graph(&back), text);
        }
    }
}
