//! Components, edge cuts, Menger fans, F-splits and k-edge-sums.

mod flow;
mod sum;

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, MultiGraph, Path, VertexId};

pub use flow::{edge_connectivity, local_edge_connectivity};
pub use sum::{edge_sum, parse_split_record, split, split_with_ids, SplitHeader, SplitRecord};

use flow::Network;

/// Connected components, ordered by their smallest vertex id. Ids and id
/// counters are preserved.
pub fn components(g: &MultiGraph) -> Vec<MultiGraph> {
    vertex_components(g).into_iter().map(|c| g.induced(&c)).collect()
}

pub(crate) fn vertex_components(g: &MultiGraph) -> Vec<BTreeSet<VertexId>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for v in g.vertices() {
        if seen.contains(&v) {
            continue;
        }
        let comp = g.reachable_from(v);
        seen.extend(comp.iter().copied());
        out.push(comp);
    }
    out
}

/// A set of edges F together with the two sides of G'∖F, where G' is the
/// component containing F.
///
/// `minimal` means G'∖F has exactly two components and every edge of F
/// joins them (a bond); `internal` additionally asks for at least two
/// vertices on each side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCut {
    pub edges: BTreeSet<EdgeId>,
    pub side_a: BTreeSet<VertexId>,
    pub side_b: BTreeSet<VertexId>,
    pub minimal: bool,
    pub internal: bool,
}

impl EdgeCut {
    /// Analyses `edges` as a cut of `g` from scratch.
    ///
    /// Errors when an edge is unknown, the set is empty, the edges lie in
    /// different components, or removing them does not disconnect anything.
    pub fn analyze(g: &MultiGraph, edges: &BTreeSet<EdgeId>) -> Result<EdgeCut> {
        let first = *edges.iter().next().ok_or_else(|| Error::invalid("an edge cut is non-empty"))?;
        let mut ends = Vec::new();
        for &e in edges {
            ends.push(g.endpoints_checked(e)?);
        }
        let component = g.reachable_from(g.endpoints(first).unwrap().0);
        if ends.iter().any(|(u, _)| !component.contains(u)) {
            return Err(Error::invalid("cut edges lie in different components"));
        }
        let host = g.induced(&component).edge_subgraph(
            &g.edge_ids().filter(|e| !edges.contains(e)).collect(),
        );
        let parts = vertex_components(&host);
        if parts.len() < 2 {
            return Err(Error::invalid("removing the edges does not disconnect their component"));
        }
        let crossing = parts.len() == 2
            && ends
                .iter()
                .all(|(u, v)| parts[0].contains(u) != parts[0].contains(v));
        let minimal = crossing;
        let (side_a, side_b) = if parts.len() == 2 {
            (parts[0].clone(), parts[1].clone())
        } else {
            let mut rest = BTreeSet::new();
            for p in &parts[1..] {
                rest.extend(p.iter().copied());
            }
            (parts[0].clone(), rest)
        };
        let internal = minimal && side_a.len() >= 2 && side_b.len() >= 2;
        Ok(EdgeCut {
            edges: edges.clone(),
            side_a,
            side_b,
            minimal,
            internal,
        })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// For each cut edge, its endpoint on side A and its endpoint on side B.
    pub fn crossing_ends(&self, g: &MultiGraph) -> Result<BTreeMap<EdgeId, (VertexId, VertexId)>> {
        let mut out = BTreeMap::new();
        for &e in &self.edges {
            let (u, v) = g.endpoints_checked(e)?;
            let pair = if self.side_a.contains(&u) { (u, v) } else { (v, u) };
            if !self.side_a.contains(&pair.0) || !self.side_b.contains(&pair.1) {
                return Err(Error::invalid(format!("edge {e} does not cross the cut")));
            }
            out.insert(e, pair);
        }
        Ok(out)
    }
}

/// A minimum edge set separating `s` from `t`, found by unit-capacity
/// augmenting paths (parallel edges count separately). The returned set is
/// the coboundary of the residual-reachable side of `s`.
pub fn min_edge_cut_between(g: &MultiGraph, s: VertexId, t: VertexId) -> Result<(usize, BTreeSet<EdgeId>)> {
    for x in [s, t] {
        if !g.contains_vertex(x) {
            return Err(Error::UnknownVertex(x));
        }
    }
    if s == t {
        return Err(Error::invalid("source and sink coincide"));
    }
    if !g.reachable_from(s).contains(&t) {
        return Err(Error::invalid(format!("vertices {s} and {t} lie in different components")));
    }
    let mut net = Network::new(g, 0);
    let (a, b) = (net.node(s), net.node(t));
    let value = net.max_flow(a, b, usize::MAX);
    let reach: BTreeSet<VertexId> = net
        .residual_reach(a)
        .into_iter()
        .filter_map(|i| net.vertex(i))
        .collect();
    let cut: BTreeSet<EdgeId> = g
        .edges()
        .filter(|(_, u, v)| reach.contains(u) != reach.contains(v))
        .map(|(e, _, _)| e)
        .collect();
    debug_assert_eq!(cut.len(), value);
    Ok((value, cut))
}

/// A minimal internal cut of cardinality ≤ `max_size` (1..=3), or `None`.
///
/// Ties are broken by cardinality first, then by the lexicographically
/// smallest sorted edge-id set, so the answer is reproducible. When the
/// graph is at least (`max_size`+1)-edge-connected the search is skipped.
pub fn find_internal_cut(g: &MultiGraph, max_size: usize) -> Result<Option<EdgeCut>> {
    if !(1..=3).contains(&max_size) {
        return Err(Error::invalid(format!("cut size bound must be in 1..=3, got {max_size}")));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.vertex_count() < 4 || edge_connectivity(g) > max_size {
        return Ok(None);
    }
    let ids: Vec<EdgeId> = g.edge_ids().collect();
    let ends: Vec<(usize, usize)> = {
        let index: BTreeMap<VertexId, usize> = g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
        g.edges().map(|(_, u, v)| (index[&u], index[&v])).collect()
    };
    let n = g.vertex_count();
    for size in 1..=max_size {
        let mut chosen = Vec::with_capacity(size);
        if let Some(found) = first_bond(&ends, n, size, 0, &mut chosen) {
            let edges: BTreeSet<EdgeId> = found.iter().map(|&i| ids[i]).collect();
            let cut = EdgeCut::analyze(g, &edges)?;
            debug_assert!(cut.internal);
            return Ok(Some(cut));
        }
    }
    Ok(None)
}

fn first_bond(ends: &[(usize, usize)], n: usize, size: usize, from: usize, chosen: &mut Vec<usize>) -> Option<Vec<usize>> {
    if chosen.len() == size {
        return is_internal_bond(ends, n, chosen).then(|| chosen.clone());
    }
    for i in from..ends.len() {
        if ends.len() - i < size - chosen.len() {
            break;
        }
        chosen.push(i);
        if let Some(found) = first_bond(ends, n, size, i + 1, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

fn is_internal_bond(ends: &[(usize, usize)], n: usize, removed: &[usize]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (i, &(u, v)) in ends.iter().enumerate() {
        if removed.contains(&i) {
            continue;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
        }
    }
    let root0 = find(&mut parent, 0);
    let mut side = vec![false; n];
    let mut other_root = None;
    let mut count_a = 0;
    for x in 0..n {
        let r = find(&mut parent, x);
        if r == root0 {
            side[x] = true;
            count_a += 1;
        } else {
            match other_root {
                None => other_root = Some(r),
                Some(o) if o != r => return false,
                _ => {}
            }
        }
    }
    if other_root.is_none() || count_a < 2 || n - count_a < 2 {
        return false;
    }
    removed.iter().all(|&i| side[ends[i].0] != side[ends[i].1])
}

/// Pairwise edge-disjoint paths from `v`, the j-th ending at `targets[j]`,
/// or `None` when no such family exists.
///
/// Computed as a unit-capacity flow from `v` to a super-sink that every
/// target feeds with capacity one; flow cycles are cut out while the flow
/// is decomposed, so every returned path is vertex-simple.
pub fn menger_fan(g: &MultiGraph, v: VertexId, targets: &[VertexId]) -> Result<Option<Vec<Path>>> {
    if !g.contains_vertex(v) {
        return Err(Error::UnknownVertex(v));
    }
    let mut distinct = BTreeSet::new();
    for &t in targets {
        if !g.contains_vertex(t) {
            return Err(Error::UnknownVertex(t));
        }
        if t == v {
            return Err(Error::invalid("the root cannot be a target"));
        }
        if !distinct.insert(t) {
            return Err(Error::invalid(format!("target {t} listed twice")));
        }
    }
    if g.degree(v) < targets.len() {
        return Err(Error::invalid(format!(
            "root {v} has degree {} but {} paths were requested",
            g.degree(v),
            targets.len()
        )));
    }
    let mut net = Network::new(g, 1);
    let sink = g.vertex_count();
    for &t in targets {
        let i = net.node(t);
        net.add_directed(i, sink);
    }
    let root = net.node(v);
    if net.max_flow(root, sink, targets.len()) < targets.len() {
        return Ok(None);
    }
    let mut out_arcs: Vec<Vec<(EdgeId, usize)>> = (0..sink).map(|x| net.flow_out(x)).collect();
    for list in &mut out_arcs {
        list.reverse(); // pop() yields the lowest edge id first
    }
    let mut sink_open: BTreeSet<usize> = targets
        .iter()
        .map(|&t| net.node(t))
        .filter(|&i| net.sink_used(i, sink))
        .collect();
    let mut by_target: BTreeMap<VertexId, Path> = BTreeMap::new();
    for _ in 0..targets.len() {
        let mut verts = vec![root];
        let mut edges: Vec<EdgeId> = Vec::new();
        loop {
            let at = *verts.last().unwrap();
            if at != root && sink_open.remove(&at) {
                break;
            }
            let (e, next) = out_arcs[at]
                .pop()
                .ok_or_else(|| Error::Internal("flow decomposition ran dry".into()))?;
            if let Some(pos) = verts.iter().position(|&x| x == next) {
                verts.truncate(pos + 1);
                edges.truncate(pos);
            } else {
                verts.push(next);
                edges.push(e);
            }
        }
        let vs: Vec<VertexId> = verts.iter().map(|&i| net.vertex(i).unwrap()).collect();
        let end = *vs.last().unwrap();
        by_target.insert(end, Path::new(vs, edges)?);
    }
    Ok(Some(targets.iter().map(|t| by_target.remove(t).unwrap()).collect()))
}
