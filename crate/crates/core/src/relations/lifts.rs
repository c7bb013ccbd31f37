//! Brute-force immersion test straight from the definition: H is immersed
//! in G iff H is a subgraph of some graph reachable from G by lifts. Edge
//! and vertex deletions commute with lifts, so they are folded into the
//! final subgraph test.

use std::collections::BTreeSet;

use super::subgraph::find_subgraph;
use crate::error::{Guard, Result};
use crate::multigraph::{canonical_form, CanonicalForm, MultiGraph};

/// Default |E(G)| limit for the lift-closure oracle.
pub const LIFT_ORACLE_EDGE_GUARD: usize = 12;

pub fn oracle_immersion_by_lifts(g: &MultiGraph, h: &MultiGraph) -> Result<bool> {
    oracle_immersion_by_lifts_guarded(g, h, Guard::Default)
}

pub fn oracle_immersion_by_lifts_guarded(g: &MultiGraph, h: &MultiGraph, guard: Guard) -> Result<bool> {
    guard.check("lift oracle host edges", g.edge_count(), LIFT_ORACLE_EDGE_GUARD)?;
    if h.vertex_count() > g.vertex_count() {
        return Ok(false);
    }
    let pattern = core(h);
    let start = canonical_form(&core(g));
    let mut seen = BTreeSet::from([start.clone()]);
    let mut stack = vec![start];
    while let Some(form) = stack.pop() {
        let state = form.to_graph();
        if find_subgraph(&state, &pattern).is_some() {
            return Ok(true);
        }
        if state.edge_count() <= pattern.edge_count() {
            continue;
        }
        for next in lifts_of(&state) {
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    Ok(false)
}

/// The graph without its isolated vertices.
fn core(g: &MultiGraph) -> MultiGraph {
    let keep = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    g.induced(&keep)
}

/// Canonical forms of all single lifts, isolated vertices dropped.
fn lifts_of(g: &MultiGraph) -> BTreeSet<CanonicalForm> {
    let mut out = BTreeSet::new();
    let mut tried = BTreeSet::new();
    for x in g.vertices() {
        let inc: Vec<_> = g.incident(x).collect();
        for i in 0..inc.len() {
            for j in i + 1..inc.len() {
                let y = g.opposite(inc[i], x).unwrap();
                let z = g.opposite(inc[j], x).unwrap();
                if y == z || !tried.insert((x, y.min(z), y.max(z))) {
                    continue;
                }
                let (lifted, _) = g.lift(inc[i], inc[j]).expect("distinct far ends");
                out.insert(canonical_form(&core(&lifted)));
            }
        }
    }
    out
}
