//! Graph sources: seeded random multigraphs and isomorph-free exhaustive
//! enumeration of small simple connected graphs.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::embedding::is_planar;
use crate::multigraph::{canonical_labeling, CanonicalForm, MultiGraph, VertexId};

/// `n` vertices joined by `m` uniformly random edges (parallel edges allowed).
pub fn random_multigraph<R: Rng>(rng: &mut R, n: usize, m: usize) -> MultiGraph {
    let mut g = MultiGraph::with_vertices(n);
    if n < 2 {
        return g;
    }
    for _ in 0..m {
        let (u, v) = distinct_pair(rng, n);
        g.add_edge(u, v).unwrap();
    }
    g
}

/// A random spanning tree on `n` vertices plus `m - (n - 1)` random edges,
/// so the result is connected with `max(m, n - 1)` edges.
pub fn random_connected_multigraph<R: Rng>(rng: &mut R, n: usize, m: usize) -> MultiGraph {
    let mut g = random_tree(rng, n);
    for _ in g.edge_count()..m {
        if n < 2 {
            break;
        }
        let (u, v) = distinct_pair(rng, n);
        g.add_edge(u, v).unwrap();
    }
    g
}

/// Connected and simple; stops early when the graph is complete.
pub fn random_connected_simple<R: Rng>(rng: &mut R, n: usize, m: usize) -> MultiGraph {
    let mut g = random_tree(rng, n);
    let mut free: Vec<(VertexId, VertexId)> = pairs(n)
        .filter(|&(u, v)| g.multiplicity(u, v) == 0)
        .collect();
    free.shuffle(rng);
    while g.edge_count() < m {
        let Some((u, v)) = free.pop() else { break };
        g.add_edge(u, v).unwrap();
    }
    g
}

/// Connected planar multigraph: a random tree, then up to `attempts`
/// random edges, each kept only if the graph stays planar. With
/// `parallel` false, edges that would duplicate an adjacency are skipped.
pub fn random_planar<R: Rng>(rng: &mut R, n: usize, attempts: usize, parallel: bool) -> MultiGraph {
    let mut g = random_tree(rng, n);
    if n < 2 {
        return g;
    }
    for _ in 0..attempts {
        let (u, v) = distinct_pair(rng, n);
        if !parallel && g.multiplicity(u, v) > 0 {
            continue;
        }
        let e = g.add_edge(u, v).unwrap();
        if !is_planar(&g) {
            g = g.delete_edges(&[e]).unwrap();
        }
    }
    g
}

fn random_tree<R: Rng>(rng: &mut R, n: usize) -> MultiGraph {
    let mut g = MultiGraph::with_vertices(n);
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.shuffle(rng);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.add_edge(VertexId(order[i]), VertexId(order[j])).unwrap();
    }
    g
}

fn distinct_pair<R: Rng>(rng: &mut R, n: usize) -> (VertexId, VertexId) {
    let u = rng.gen_range(0..n);
    let mut v = rng.gen_range(0..n - 1);
    if v >= u {
        v += 1;
    }
    (VertexId(u as u32), VertexId(v as u32))
}

fn pairs(n: usize) -> impl Iterator<Item = (VertexId, VertexId)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (VertexId(u as u32), VertexId(v as u32))))
}

/// All simple connected graphs on exactly `n` vertices, one per
/// isomorphism class, in canonical form, sorted.
///
/// Canonical augmentation by vertex addition: a child is kept only when
/// the added vertex lies in the orbit of the last non-cut vertex of the
/// canonical labelling, so every class arises from exactly one parent
/// class. Children of one parent are deduplicated by canonical form.
pub fn connected_graphs(n: usize) -> Vec<MultiGraph> {
    let mut level = if n == 0 { Vec::new() } else { vec![MultiGraph::with_vertices(1)] };
    for _ in 1..n {
        level = next_level(&level);
    }
    level
}

/// [`connected_graphs`] for every order from 1 to `max_n`.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Vec<MultiGraph>> {
    let mut out = Vec::new();
    if max_n == 0 {
        return out;
    }
    out.push(vec![MultiGraph::with_vertices(1)]);
    for _ in 1..max_n {
        let next = next_level(out.last().unwrap());
        out.push(next);
    }
    out
}

pub(crate) fn next_level(parents: &[MultiGraph]) -> Vec<MultiGraph> {
    let mut out: Vec<CanonicalForm> = Vec::new();
    for p in parents {
        let k = p.vertex_count();
        let mut seen = BTreeSet::new();
        for mask in 1u32..(1 << k) {
            let mut child = p.clone();
            let w = child.add_vertex();
            for i in 0..k {
                if mask & (1 << i) != 0 {
                    child.add_edge(VertexId(i as u32), w).unwrap();
                }
            }
            let lab = canonical_labeling(&child);
            let last = (0..=k)
                .rev()
                .find(|&pos| !is_cut_vertex(&child, lab.order[pos]))
                .expect("a connected graph has a non-cut vertex");
            if lab.orbits[last].contains(&w) && seen.insert(lab.form.clone()) {
                out.push(lab.form);
            }
        }
    }
    out.sort();
    out.iter().map(CanonicalForm::to_graph).collect()
}

fn is_cut_vertex(g: &MultiGraph, v: VertexId) -> bool {
    let rest = g.delete_vertices(&[v]).unwrap();
    rest.vertex_count() > 0 && !rest.is_connected()
}
