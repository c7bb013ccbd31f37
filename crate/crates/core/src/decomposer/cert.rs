//! The `immersion-kit-cert v1` text format: a pre-order dump of each tree.
//!
//! ```text
//! immersion-kit-cert v1
//! tree
//! split
//! cut 12 13 14
//! side_a 0 1 2 3
//! side_b 4 5 6 7
//! new 8 9
//! 12 <-> 12
//! ...
//! leaf
//! vertices 0 1 2 3 8
//! edge 0 0 1
//! ...
//! cert bw 3 exact
//! nodes 10
//! parent - 0 0 ...
//! 1 -> 0
//! ...
//! ```
//!
//! `cert` is `planar-subcubic`, `uncertified`, or `bw <bound> exact|heuristic`
//! followed by a branch decomposition.

use super::{Certainty, Certificate, DecompositionTree};
use crate::branchwidth::BranchDecomposition;
use crate::connectivity::parse_split_record;
use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, MultiGraph, VertexId};

pub const CERT_HEADER: &str = "immersion-kit-cert v1";

pub fn write_certificate(trees: &[DecompositionTree]) -> String {
    let mut out = format!("{CERT_HEADER}\n");
    for t in trees {
        out.push_str("tree\n");
        write_tree(t, &mut out);
    }
    out
}

fn write_tree(t: &DecompositionTree, out: &mut String) {
    match t {
        DecompositionTree::Split { split, left, right } => {
            out.push_str("split\n");
            let join = |it: &mut dyn Iterator<Item = String>| it.collect::<Vec<_>>().join(" ");
            out.push_str(&format!("cut {}\n", join(&mut split.cut_edges.iter().map(|e| e.to_string()))));
            out.push_str(&format!("side_a {}\n", join(&mut split.side_a.iter().map(|v| v.to_string()))));
            out.push_str(&format!("side_b {}\n", join(&mut split.side_b.iter().map(|v| v.to_string()))));
            out.push_str(&format!("new {} {}\n", split.new_vertex_a, split.new_vertex_b));
            for (a, b) in &split.pairing {
                out.push_str(&format!("{a} <-> {b}\n"));
            }
            write_tree(left, out);
            write_tree(right, out);
        }
        DecompositionTree::Leaf { graph, certificate } => {
            out.push_str("leaf\nvertices");
            for v in graph.vertices() {
                out.push_str(&format!(" {v}"));
            }
            out.push('\n');
            for (e, u, v) in graph.edges() {
                out.push_str(&format!("edge {e} {u} {v}\n"));
            }
            match certificate {
                Certificate::PlanarSubcubic => out.push_str("cert planar-subcubic\n"),
                Certificate::Uncertified => out.push_str("cert uncertified\n"),
                Certificate::BranchwidthAtMost {
                    bound,
                    decomposition,
                    certainty,
                } => {
                    let how = match certainty {
                        Certainty::Exact => "exact",
                        Certainty::Heuristic => "heuristic",
                    };
                    out.push_str(&format!("cert bw {bound} {how}\n"));
                    out.push_str(&decomposition.to_text());
                }
            }
        }
    }
}

/// A keyword line (`tree`, `split`, `leaf`) and the lines after it, with
/// the 1-based number of its first body line.
struct Block<'a> {
    kind: &'a str,
    line: usize,
    body: Vec<&'a str>,
}

pub fn parse_certificate(text: &str) -> Result<Vec<DecompositionTree>> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    match lines.next() {
        Some((_, l)) if l.trim() == CERT_HEADER => {}
        Some((i, l)) => {
            return Err(Error::parse(i + 1, format!("expected `{CERT_HEADER}`, found {:?}", l.trim())));
        }
        None => return Err(Error::parse(1, "empty certificate")),
    }
    let mut blocks: Vec<Block> = Vec::new();
    for (i, raw) in lines {
        let l = raw.trim();
        if matches!(l, "tree" | "split" | "leaf") {
            blocks.push(Block {
                kind: l,
                line: i + 2,
                body: Vec::new(),
            });
        } else {
            match blocks.last_mut() {
                Some(b) => b.body.push(l),
                None => return Err(Error::parse(i + 1, format!("line {l:?} outside any tree"))),
            }
        }
    }
    let mut at = 0;
    let mut trees = Vec::new();
    while at < blocks.len() {
        let b = &blocks[at];
        if b.kind != "tree" || !b.body.is_empty() {
            return Err(Error::parse(b.line - 1, "expected a bare `tree` line"));
        }
        at += 1;
        trees.push(parse_node(&blocks, &mut at)?);
    }
    Ok(trees)
}

fn parse_node(blocks: &[Block], at: &mut usize) -> Result<DecompositionTree> {
    let b = blocks
        .get(*at)
        .ok_or_else(|| Error::parse(blocks.last().map_or(1, |b| b.line), "tree ends early"))?;
    *at += 1;
    match b.kind {
        "split" => {
            let split = parse_split_record(&b.body, b.line)?;
            let left = parse_node(blocks, at)?;
            let right = parse_node(blocks, at)?;
            Ok(DecompositionTree::Split {
                split,
                left: Box::new(left),
                right: Box::new(right),
            })
        }
        "leaf" => parse_leaf(&b.body, b.line),
        _ => Err(Error::parse(b.line - 1, "expected `split` or `leaf`")),
    }
}

fn parse_leaf(body: &[&str], first_line: usize) -> Result<DecompositionTree> {
    let mut graph = MultiGraph::new();
    let mut certificate = None;
    for (k, line) in body.iter().enumerate() {
        let line_no = first_line + k;
        let num = |s: &str| {
            s.parse::<u32>()
                .map_err(|_| Error::parse(line_no, format!("bad number {s:?}")))
        };
        let mut words = line.split_whitespace();
        match words.next() {
            Some("vertices") => {
                for w in words {
                    graph
                        .add_vertex_with_id(VertexId(num(w)?))
                        .map_err(|e| Error::parse(line_no, e.to_string()))?;
                }
            }
            Some("edge") => {
                let ids = words.map(num).collect::<Result<Vec<_>>>()?;
                let [e, u, v] = ids[..] else {
                    return Err(Error::parse(line_no, "expected `edge <id> <u> <v>`"));
                };
                graph
                    .add_edge_with_id(EdgeId(e), VertexId(u), VertexId(v))
                    .map_err(|err| Error::parse(line_no, err.to_string()))?;
            }
            Some("cert") => {
                let rest: Vec<&str> = words.collect();
                let c = match rest[..] {
                    ["planar-subcubic"] => Certificate::PlanarSubcubic,
                    ["uncertified"] => Certificate::Uncertified,
                    ["bw", bound, how] => {
                        let certainty = match how {
                            "exact" => Certainty::Exact,
                            "heuristic" => Certainty::Heuristic,
                            _ => return Err(Error::parse(line_no, format!("unknown certainty {how:?}"))),
                        };
                        let decomposition = BranchDecomposition::parse_lines(&body[k + 1..], line_no + 1)?;
                        certificate = Some(Certificate::BranchwidthAtMost {
                            bound: num(bound)? as usize,
                            decomposition,
                            certainty,
                        });
                        break;
                    }
                    _ => return Err(Error::parse(line_no, format!("unknown certificate {line:?}"))),
                };
                certificate = Some(c);
            }
            _ => return Err(Error::parse(line_no, format!("unexpected leaf line {line:?}"))),
        }
    }
    let certificate = certificate.ok_or_else(|| Error::parse(first_line, "leaf lacks a `cert` line"))?;
    Ok(DecompositionTree::Leaf { graph, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposer::decompose;
    use crate::multigraph::families::*;

    #[test]
    fn round_trip() {
        for g in [twin_k4_bridged(), cube(), complete(5), disjoint_union(&cycle(3), &star(3))] {
            let trees = decompose(&g).unwrap();
            let text = write_certificate(&trees);
            assert_eq!(parse_certificate(&text).unwrap(), trees);
            assert_eq!(write_certificate(&parse_certificate(&text).unwrap()), text);
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse_certificate("nope\n"), Err(Error::Parse { line: 1, .. })));
        let text = format!("{CERT_HEADER}\ntree\nleaf\nvertices 0 1\nedge 0 0 x\ncert uncertified\n");
        assert!(matches!(parse_certificate(&text), Err(Error::Parse { line: 5, .. })));
        let text = format!("{CERT_HEADER}\ntree\nsplit\ncut 1\nside_a 0\nside_b 1\nnew 2 3\n");
        assert!(parse_certificate(&text).is_err());
    }
}
