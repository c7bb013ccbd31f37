use std::collections::{BTreeMap, BTreeSet};

use super::{components, EdgeCut};
use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, MultiGraph, VertexId};

/// The F-split of a graph along a minimal internal cut.
///
/// `component_a` is side A plus the fresh vertex `new_vertex_a`, which
/// stands for the contracted side B; symmetrically for `component_b`. A cut
/// edge `f = {a, b}` survives as the stub `{a, new_vertex_a}` in
/// `component_a` and `{new_vertex_b, b}` in `component_b`, both keeping the
/// id `f`, so `pairing` is `(f, f)` for every cut edge and recomposition
/// restores the original ids exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitRecord {
    pub cut: EdgeCut,
    pub new_vertex_a: VertexId,
    pub new_vertex_b: VertexId,
    /// σ as (stub at `new_vertex_a`, stub at `new_vertex_b`).
    pub pairing: Vec<(EdgeId, EdgeId)>,
    pub component_a: MultiGraph,
    pub component_b: MultiGraph,
    /// Components of the input that do not contain the cut.
    pub untouched: Vec<MultiGraph>,
}

/// F-split using the next two free vertex ids of `g`.
pub fn split(g: &MultiGraph, cut: &EdgeCut) -> Result<SplitRecord> {
    let a = g.next_vertex_id();
    let b = VertexId(a.0 + 1);
    split_with_ids(g, cut, a, b)
}

/// F-split with caller-chosen fresh vertex ids (which must not occur in `g`).
pub fn split_with_ids(g: &MultiGraph, cut: &EdgeCut, new_a: VertexId, new_b: VertexId) -> Result<SplitRecord> {
    if new_a == new_b || g.contains_vertex(new_a) || g.contains_vertex(new_b) {
        return Err(Error::invalid("split vertices must be fresh and distinct"));
    }
    let fresh = EdgeCut::analyze(g, &cut.edges)?;
    if !fresh.minimal {
        return Err(Error::invalid("cut is not minimal"));
    }
    if !fresh.internal {
        return Err(Error::invalid("cut is not internal: a side has fewer than two vertices"));
    }
    if fresh.side_a != cut.side_a && fresh.side_a != cut.side_b {
        return Err(Error::invalid("cut sides do not match the graph"));
    }
    let ends = fresh.crossing_ends(g)?;
    let reserve = |h: &mut MultiGraph| h.reserve_ids(new_a.0.max(new_b.0) + 1, 0);

    let mut comp_a = g.induced(&fresh.side_a);
    reserve(&mut comp_a);
    comp_a.add_vertex_with_id(new_a)?;
    let mut comp_b = g.induced(&fresh.side_b);
    reserve(&mut comp_b);
    comp_b.add_vertex_with_id(new_b)?;
    let mut pairing = Vec::new();
    for (&f, &(x, y)) in &ends {
        comp_a.add_edge_with_id(f, x, new_a)?;
        comp_b.add_edge_with_id(f, new_b, y)?;
        pairing.push((f, f));
    }
    let mut host = fresh.side_a.clone();
    host.extend(fresh.side_b.iter().copied());
    let untouched = components(g)
        .into_iter()
        .filter(|c| !c.vertices().any(|v| host.contains(&v)))
        .collect();
    Ok(SplitRecord {
        cut: fresh,
        new_vertex_a: new_a,
        new_vertex_b: new_b,
        pairing,
        component_a: comp_a,
        component_b: comp_b,
        untouched,
    })
}

impl SplitRecord {
    /// Text form: the cut edge list, the sides, the new vertex ids, then σ
    /// as `eid_a <-> eid_b` lines.
    pub fn to_text(&self) -> String {
        let join = |it: &mut dyn Iterator<Item = String>| it.collect::<Vec<_>>().join(" ");
        let mut out = String::new();
        out.push_str(&format!("cut {}\n", join(&mut self.cut.edges.iter().map(|e| e.to_string()))));
        out.push_str(&format!("side_a {}\n", join(&mut self.cut.side_a.iter().map(|v| v.to_string()))));
        out.push_str(&format!("side_b {}\n", join(&mut self.cut.side_b.iter().map(|v| v.to_string()))));
        out.push_str(&format!("new {} {}\n", self.new_vertex_a, self.new_vertex_b));
        for (a, b) in &self.pairing {
            out.push_str(&format!("{a} <-> {b}\n"));
        }
        out
    }

    /// Recombines the two pieces with σ.
    pub fn recombine(&self) -> Result<MultiGraph> {
        edge_sum(
            &self.component_a,
            self.new_vertex_a,
            &self.component_b,
            self.new_vertex_b,
            &self.pairing,
        )
    }
}

/// Parsed header of a split record; the pieces live elsewhere (for example
/// in the children of a certificate node).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitHeader {
    pub cut_edges: BTreeSet<EdgeId>,
    pub side_a: BTreeSet<VertexId>,
    pub side_b: BTreeSet<VertexId>,
    pub new_vertex_a: VertexId,
    pub new_vertex_b: VertexId,
    pub pairing: Vec<(EdgeId, EdgeId)>,
}

/// Parses the lines written by [`SplitRecord::to_text`]. `first_line` is the
/// 1-based line number of `lines[0]`, used in error messages.
pub fn parse_split_record(lines: &[&str], first_line: usize) -> Result<SplitHeader> {
    let mut cut_edges = None;
    let mut side_a = None;
    let mut side_b = None;
    let mut new = None;
    let mut pairing = Vec::new();
    for (k, raw) in lines.iter().enumerate() {
        let line_no = first_line + k;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let nums = |rest: &str| -> Result<Vec<u32>> {
            rest.split_whitespace()
                .map(|s| s.parse::<u32>().map_err(|_| Error::parse(line_no, format!("bad id {s:?}"))))
                .collect()
        };
        if let Some(rest) = line.strip_prefix("cut") {
            cut_edges = Some(nums(rest)?.into_iter().map(EdgeId).collect());
        } else if let Some(rest) = line.strip_prefix("side_a") {
            side_a = Some(nums(rest)?.into_iter().map(VertexId).collect());
        } else if let Some(rest) = line.strip_prefix("side_b") {
            side_b = Some(nums(rest)?.into_iter().map(VertexId).collect());
        } else if let Some(rest) = line.strip_prefix("new") {
            match nums(rest)?.as_slice() {
                [a, b] => new = Some((VertexId(*a), VertexId(*b))),
                _ => return Err(Error::parse(line_no, "expected `new <va> <vb>`")),
            }
        } else if let Some((a, b)) = line.split_once("<->") {
            let a = nums(a)?;
            let b = nums(b)?;
            match (a.as_slice(), b.as_slice()) {
                ([a], [b]) => pairing.push((EdgeId(*a), EdgeId(*b))),
                _ => return Err(Error::parse(line_no, "expected `eid_a <-> eid_b`")),
            }
        } else {
            return Err(Error::parse(line_no, format!("unexpected split record line {line:?}")));
        }
    }
    let missing = |what: &str| Error::parse(first_line, format!("split record lacks `{what}`"));
    let (new_vertex_a, new_vertex_b) = new.ok_or_else(|| missing("new"))?;
    Ok(SplitHeader {
        cut_edges: cut_edges.ok_or_else(|| missing("cut"))?,
        side_a: side_a.ok_or_else(|| missing("side_a"))?,
        side_b: side_b.ok_or_else(|| missing("side_b"))?,
        new_vertex_a,
        new_vertex_b,
        pairing,
    })
}

/// The k-edge-sum of `g1` and `g2` on `v1` and `v2`.
///
/// Each pair `(e, σ(e))` of `sigma` is lifted to a new edge joining the far
/// endpoints; the new edge takes the id of `e`. If the two graphs share
/// vertex ids outside `{v1, v2}`, or edge ids other than identically paired
/// stubs, `g2` is first renumbered onto fresh ids.
pub fn edge_sum(
    g1: &MultiGraph,
    v1: VertexId,
    g2: &MultiGraph,
    v2: VertexId,
    sigma: &[(EdgeId, EdgeId)],
) -> Result<MultiGraph> {
    if !g1.contains_vertex(v1) {
        return Err(Error::UnknownVertex(v1));
    }
    if !g2.contains_vertex(v2) {
        return Err(Error::UnknownVertex(v2));
    }
    let k = sigma.len();
    if g1.degree(v1) != k || g2.degree(v2) != k {
        return Err(Error::invalid(format!(
            "degree mismatch: deg(v1) = {}, deg(v2) = {}, |σ| = {k}",
            g1.degree(v1),
            g2.degree(v2)
        )));
    }
    let left: BTreeSet<EdgeId> = sigma.iter().map(|p| p.0).collect();
    let right: BTreeSet<EdgeId> = sigma.iter().map(|p| p.1).collect();
    if left.len() != k || right.len() != k || left != g1.incident(v1).collect() || right != g2.incident(v2).collect() {
        return Err(Error::invalid("σ is not a bijection between the edges at v1 and the edges at v2"));
    }

    let clash_v = g2.vertices().any(|v| v != v2 && v != v1 && g1.contains_vertex(v))
        || (g1.contains_vertex(v2) && v2 != v1)
        || (g2.contains_vertex(v1) && v1 != v2);
    let identical: BTreeSet<EdgeId> = sigma.iter().filter(|(a, b)| a == b).map(|p| p.0).collect();
    let clash_e = g2.edge_ids().any(|e| g1.contains_edge(e) && !identical.contains(&e));
    let (g2, v2, sigma): (MultiGraph, VertexId, Vec<(EdgeId, EdgeId)>) = if clash_v || clash_e {
        let base_v = g1.next_vertex_id().0.max(g2.next_vertex_id().0);
        let base_e = g1.next_edge_id().0.max(g2.next_edge_id().0);
        let vmap: BTreeMap<VertexId, VertexId> = g2
            .vertices()
            .enumerate()
            .map(|(i, v)| (v, VertexId(base_v + i as u32)))
            .collect();
        let emap: BTreeMap<EdgeId, EdgeId> =
            g2.edge_ids().enumerate().map(|(i, e)| (e, EdgeId(base_e + i as u32))).collect();
        let mut h = MultiGraph::new();
        for v in g2.vertices() {
            h.add_vertex_with_id(vmap[&v])?;
        }
        for (e, a, b) in g2.edges() {
            h.add_edge_with_id(emap[&e], vmap[&a], vmap[&b])?;
        }
        let sigma = sigma.iter().map(|&(a, b)| (a, emap[&b])).collect();
        (h, vmap[&v2], sigma)
    } else {
        (g2.clone(), v2, sigma.to_vec())
    };

    let mut out = MultiGraph::new();
    out.reserve_ids(
        g1.next_vertex_id().0.max(g2.next_vertex_id().0),
        g1.next_edge_id().0.max(g2.next_edge_id().0),
    );
    for v in g1.vertices().filter(|&v| v != v1) {
        out.add_vertex_with_id(v)?;
    }
    for v in g2.vertices().filter(|&v| v != v2) {
        out.add_vertex_with_id(v)?;
    }
    for (e, a, b) in g1.edges().filter(|(e, _, _)| !left.contains(e)) {
        out.add_edge_with_id(e, a, b)?;
    }
    let right: BTreeSet<EdgeId> = sigma.iter().map(|p| p.1).collect();
    for (e, a, b) in g2.edges().filter(|(e, _, _)| !right.contains(e)) {
        out.add_edge_with_id(e, a, b)?;
    }
    for &(e1, e2) in &sigma {
        let a = g1.opposite(e1, v1).unwrap();
        let b = g2.opposite(e2, v2).unwrap();
        out.add_edge_with_id(e1, a, b)?;
    }
    Ok(out)
}
