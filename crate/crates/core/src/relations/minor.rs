use std::collections::{BTreeMap, BTreeSet};

use super::subgraph::find_subgraph;
use crate::connectivity::components;
use crate::error::{Error, Guard, Result};
use crate::multigraph::{canonical_form, EdgeId, MultiGraph, VertexId};

/// Default |E(G)| limit for minor search.
pub const MINOR_EDGE_GUARD: usize = 30;

/// Disjoint connected branch sets, one per H-vertex, and a distinct G-edge
/// joining the right branch sets for every H-edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorModel {
    pub branch_sets: BTreeMap<VertexId, BTreeSet<VertexId>>,
    pub edge_map: BTreeMap<EdgeId, EdgeId>,
}

impl MinorModel {
    pub fn validate(&self, g: &MultiGraph, h: &MultiGraph) -> Result<()> {
        if self.branch_sets.keys().copied().collect::<BTreeSet<_>>() != h.vertices().collect() {
            return Err(Error::invalid("branch sets do not cover V(H) exactly"));
        }
        let mut owner = BTreeMap::new();
        for (&hv, set) in &self.branch_sets {
            if set.is_empty() {
                return Err(Error::invalid(format!("branch set of {hv} is empty")));
            }
            for &x in set {
                if !g.contains_vertex(x) {
                    return Err(Error::UnknownVertex(x));
                }
                if owner.insert(x, hv).is_some() {
                    return Err(Error::invalid(format!("vertex {x} lies in two branch sets")));
                }
            }
            let first = *set.iter().next().unwrap();
            if g.induced(set).reachable_from(first) != *set {
                return Err(Error::invalid(format!("branch set of {hv} is not connected")));
            }
        }
        if self.edge_map.keys().copied().collect::<BTreeSet<_>>() != h.edge_ids().collect() {
            return Err(Error::invalid("edge map does not cover E(H) exactly"));
        }
        let images: BTreeSet<EdgeId> = self.edge_map.values().copied().collect();
        if images.len() != self.edge_map.len() {
            return Err(Error::invalid("two H-edges share a G-edge"));
        }
        for (&he, &ge) in &self.edge_map {
            let (a, b) = h.endpoints(he).unwrap();
            let (x, y) = g.endpoints_checked(ge)?;
            let (ox, oy) = (owner.get(&x), owner.get(&y));
            if !(ox == Some(&a) && oy == Some(&b) || ox == Some(&b) && oy == Some(&a)) {
                return Err(Error::invalid(format!("G-edge {ge} does not join the branch sets of H-edge {he}")));
            }
        }
        Ok(())
    }
}

pub fn contains_minor(g: &MultiGraph, h: &MultiGraph) -> Result<Option<MinorModel>> {
    contains_minor_guarded(g, h, Guard::Default)
}

/// Search over edge contractions: H is a minor of G iff H is a subgraph of
/// some contraction of G. States are memoised by canonical form (of the
/// simplification when H is simple).
pub fn contains_minor_guarded(g: &MultiGraph, h: &MultiGraph, guard: Guard) -> Result<Option<MinorModel>> {
    guard.check("minor search host edges", g.edge_count(), MINOR_EDGE_GUARD)?;
    // A connected H lives inside one component of G.
    if h.vertex_count() > 0 && h.is_connected() && !g.is_connected() {
        for part in components(g) {
            if let Some(model) = search(&part, h)? {
                model
                    .validate(g, h)
                    .map_err(|e| Error::Internal(format!("minor search produced an invalid model: {e}")))?;
                return Ok(Some(model));
            }
        }
        return Ok(None);
    }
    search(g, h)
}

fn search(g: &MultiGraph, h: &MultiGraph) -> Result<Option<MinorModel>> {
    let simple = h.is_simple();
    let key = |s: &MultiGraph| canonical_form(&if simple { s.simplify() } else { s.clone() });
    let start: BTreeMap<VertexId, BTreeSet<VertexId>> = g.vertices().map(|v| (v, BTreeSet::from([v]))).collect();
    let mut seen = BTreeSet::from([key(g)]);
    let mut stack = vec![(g.clone(), start)];
    while let Some((state, sets)) = stack.pop() {
        if let Some(map) = find_subgraph(&state, h) {
            let model = build(&state, h, &map, &sets);
            model
                .validate(g, h)
                .map_err(|e| Error::Internal(format!("minor search produced an invalid model: {e}")))?;
            return Ok(Some(model));
        }
        if state.vertex_count() <= h.vertex_count() {
            continue;
        }
        let mut pairs = BTreeSet::new();
        for (e, u, v) in state.edges() {
            if !pairs.insert((u, v)) {
                continue;
            }
            let (next, merged) = state.contract(e)?;
            let k = key(&next);
            if seen.insert(k) {
                let mut next_sets = sets.clone();
                let mut union = next_sets.remove(&u).unwrap();
                union.extend(next_sets.remove(&v).unwrap());
                next_sets.insert(merged, union);
                stack.push((next, next_sets));
            }
        }
    }
    Ok(None)
}

fn build(
    state: &MultiGraph,
    h: &MultiGraph,
    map: &BTreeMap<VertexId, VertexId>,
    sets: &BTreeMap<VertexId, BTreeSet<VertexId>>,
) -> MinorModel {
    let branch_sets = map.iter().map(|(&hv, sv)| (hv, sets[sv].clone())).collect();
    let mut taken = BTreeSet::new();
    let mut edge_map = BTreeMap::new();
    for (he, a, b) in h.edges() {
        let ge = state
            .edges_between(map[&a], map[&b])
            .find(|e| !taken.contains(e))
            .expect("subgraph map respects multiplicities");
        taken.insert(ge);
        edge_map.insert(he, ge);
    }
    MinorModel { branch_sets, edge_map }
}
