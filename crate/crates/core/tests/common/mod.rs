#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use immersion_kit::confluence::{overlap_report, PathFan};
use immersion_kit::connectivity::components;
use immersion_kit::embedding::embed_planar;
use immersion_kit::generate::{random_connected_multigraph, random_planar};
use immersion_kit::multigraph::{canonical_form, CanonicalForm, MultiGraph};
use immersion_kit::relations::is_kuratowski_immersion_free;
use immersion_kit::VertexId;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Every multigraph on exactly `n` vertices with each pair repeated at
/// most `max_mult` times, one per isomorphism class.
pub fn all_multigraphs(n: usize, max_mult: u32, connected_only: bool) -> Vec<MultiGraph> {
    let pairs: Vec<(u32, u32)> = (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v))).collect();
    let base = max_mult as u64 + 1;
    let total = base.pow(pairs.len() as u32);
    let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
    let mut out = Vec::new();
    for code in 0..total {
        let mut g = MultiGraph::with_vertices(n);
        let mut c = code;
        for &(u, v) in &pairs {
            for _ in 0..c % base {
                g.add_edge(VertexId(u), VertexId(v)).unwrap();
            }
            c /= base;
        }
        if connected_only && !g.is_connected() {
            continue;
        }
        if seen.insert(canonical_form(&g)) {
            out.push(g);
        }
    }
    out
}

/// Isomorphism key: the sorted canonical forms of the components. Much
/// cheaper than one canonical form for graphs with many equal components.
pub fn component_key(g: &MultiGraph) -> Vec<CanonicalForm> {
    let mut key: Vec<CanonicalForm> = components(g).iter().map(canonical_form).collect();
    key.sort();
    key
}

/// Every simple graph without isolated vertices having between 1 and
/// `max_m` edges, one per isomorphism class, by edge augmentation.
pub fn simple_graphs_by_edges(max_m: usize) -> Vec<MultiGraph> {
    let mut level: Vec<MultiGraph> = vec![MultiGraph::from_edges(2, &[(0, 1)]).unwrap()];
    let mut out = level.clone();
    for _ in 1..max_m {
        let mut next: BTreeMap<Vec<CanonicalForm>, MultiGraph> = BTreeMap::new();
        for g in &level {
            let n = g.vertex_count() as u32;
            let mut candidates = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if g.multiplicity(VertexId(u), VertexId(v)) == 0 {
                        candidates.push((u, v, 0));
                    }
                }
                candidates.push((u, n, 1));
            }
            candidates.push((n, n + 1, 2));
            for (u, v, fresh) in candidates {
                let mut h = g.clone();
                for _ in 0..fresh {
                    h.add_vertex();
                }
                h.add_edge(VertexId(u), VertexId(v)).unwrap();
                next.entry(component_key(&h)).or_insert(h);
            }
        }
        level = next.into_values().collect();
        out.extend(level.iter().cloned());
    }
    out
}

/// Random connected multigraphs with at most `max_m` edges that immerse
/// neither K5 nor K3,3, by rejection. Returns the samples and the number
/// of rejected draws.
pub fn immersion_free_samples(rng: &mut ChaCha8Rng, count: usize, max_m: usize) -> (Vec<MultiGraph>, usize) {
    let mut out = Vec::new();
    let mut rejected = 0;
    while out.len() < count {
        let n = rng.gen_range(5..=10);
        let m = rng.gen_range(n - 1..=max_m.max(n - 1));
        let g = random_connected_multigraph(rng, n, m);
        if is_kuratowski_immersion_free(&g).unwrap().0 {
            out.push(g);
        } else {
            rejected += 1;
        }
    }
    (out, rejected)
}

/// A fan of `r <= 4` paths from a menger_fan call on a random embedded
/// planar host with at most `max_n` vertices.
pub fn random_embedded_fan(rng: &mut ChaCha8Rng, max_n: usize) -> PathFan {
    loop {
        let n = rng.gen_range(3..=max_n);
        let parallel = rng.gen_bool(0.3);
        let host = random_planar(rng, n, 3 * n, parallel);
        let rs = embed_planar(&host).unwrap().unwrap();
        let vertices: Vec<VertexId> = host.vertices().collect();
        let root = *vertices.choose(rng).unwrap();
        let r = rng.gen_range(1..=4).min(host.degree(root)).min(n - 1);
        if r == 0 {
            continue;
        }
        let mut others: Vec<VertexId> = vertices.iter().copied().filter(|&v| v != root).collect();
        others.shuffle(rng);
        others.truncate(r);
        if let Some(fan) = PathFan::from_menger(host, Some(rs), root, others).unwrap() {
            return fan;
        }
    }
}

/// [`random_embedded_fan`] conditioned on the fan not being confluent.
pub fn random_tangled_fan(rng: &mut ChaCha8Rng, max_n: usize) -> PathFan {
    loop {
        let fan = random_embedded_fan(rng, max_n);
        if overlap_report(&fan).unwrap().g > 0 {
            return fan;
        }
    }
}
