//! Canonical forms for small multigraphs by individualisation and refinement.
//!
//! Every leaf of the search tree is explored (no automorphism pruning), so
//! the cost grows with |Aut(G)|. This is fine for the desk-scale graphs the
//! exhaustive oracles and the enumerator work with.

use std::collections::BTreeSet;

use super::{MultiGraph, VertexId};

/// Isomorphism-invariant encoding: vertex count followed by the upper
/// triangle of the multiplicity matrix in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u32>);

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.0.first().copied().unwrap_or(0) as usize
    }

    /// Rebuilds the graph on vertices `0..n` in canonical order.
    pub fn to_graph(&self) -> MultiGraph {
        let n = self.vertex_count();
        let mut g = MultiGraph::with_vertices(n);
        let mut k = 1;
        for i in 0..n {
            for j in i + 1..n {
                for _ in 0..self.0[k] {
                    g.add_edge(VertexId(i as u32), VertexId(j as u32)).unwrap();
                }
                k += 1;
            }
        }
        g
    }
}

#[derive(Debug, Clone)]
pub struct CanonicalLabeling {
    pub form: CanonicalForm,
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<VertexId>,
    /// Vertices that take the last canonical position in some optimal
    /// labelling, i.e. the automorphism orbit of `order[n - 1]`.
    pub last_orbit: BTreeSet<VertexId>,
    /// `orbits[i]` is the automorphism orbit of `order[i]`.
    pub orbits: Vec<BTreeSet<VertexId>>,
}

pub fn canonical_form(g: &MultiGraph) -> CanonicalForm {
    canonical_labeling(g).form
}

pub fn canonical_labeling(g: &MultiGraph) -> CanonicalLabeling {
    let (ids, m) = g.adjacency_matrix();
    let n = ids.len();
    let colours = refine(&m, vec![0; n]);
    let mut best: Best = None;
    search(&m, colours, &mut best);
    match best {
        None => CanonicalLabeling {
            form: CanonicalForm(vec![0]),
            order: Vec::new(),
            last_orbit: BTreeSet::new(),
            orbits: Vec::new(),
        },
        Some((form, perm, orbits)) => {
            let orbits: Vec<BTreeSet<VertexId>> =
                orbits.into_iter().map(|o| o.into_iter().map(|i| ids[i]).collect()).collect();
            CanonicalLabeling {
                form: CanonicalForm(form),
                order: perm.iter().map(|&i| ids[i]).collect(),
                last_orbit: orbits.last().cloned().unwrap_or_default(),
                orbits,
            }
        }
    }
}

impl MultiGraph {
    pub fn canonical_labeling(&self) -> CanonicalLabeling {
        canonical_labeling(self)
    }
}

fn encode(m: &[Vec<u32>], perm: &[usize]) -> Vec<u32> {
    let n = perm.len();
    let mut out = Vec::with_capacity(1 + n * (n.saturating_sub(1)) / 2);
    out.push(n as u32);
    for i in 0..n {
        for j in i + 1..n {
            out.push(m[perm[i]][perm[j]]);
        }
    }
    out
}

type Best = Option<(Vec<u32>, Vec<usize>, Vec<BTreeSet<usize>>)>;

fn search(m: &[Vec<u32>], colours: Vec<usize>, best: &mut Best) {
    let n = colours.len();
    let mut counts = vec![0usize; n.max(1)];
    for &c in &colours {
        counts[c] += 1;
    }
    let target = (0..n).find(|&c| counts[c] > 1);
    let Some(cell) = target else {
        if n == 0 {
            return;
        }
        let mut perm = vec![0usize; n];
        for (v, &c) in colours.iter().enumerate() {
            perm[c] = v;
        }
        let form = encode(m, &perm);
        match best {
            Some((bf, _, orbits)) if *bf == form => {
                for (o, &v) in orbits.iter_mut().zip(&perm) {
                    o.insert(v);
                }
            }
            Some((bf, _, _)) if *bf < form => {}
            _ => {
                let orbits = perm.iter().map(|&v| BTreeSet::from([v])).collect();
                *best = Some((form, perm, orbits));
            }
        }
        return;
    };
    for v in 0..n {
        if colours[v] != cell {
            continue;
        }
        let individualised: Vec<usize> = colours
            .iter()
            .enumerate()
            .map(|(u, &c)| {
                if c > cell || (c == cell && u != v) {
                    c + 1
                } else {
                    c
                }
            })
            .collect();
        search(m, refine(m, individualised), best);
    }
}

/// Equitable refinement; colours are renamed by the rank of their signature
/// so the result does not depend on vertex numbering.
fn refine(m: &[Vec<u32>], mut colours: Vec<usize>) -> Vec<usize> {
    let n = colours.len();
    let mut classes = distinct(&colours);
    loop {
        let sigs: Vec<(usize, Vec<(usize, u32)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(usize, u32)> =
                    (0..n).filter(|&u| m[v][u] > 0).map(|u| (colours[u], m[v][u])).collect();
                nb.sort_unstable();
                (colours[v], nb)
            })
            .collect();
        let mut table: Vec<&(usize, Vec<(usize, u32)>)> = sigs.iter().collect();
        table.sort();
        table.dedup();
        colours = sigs.iter().map(|s| table.binary_search(&s).unwrap()).collect();
        let now = table.len();
        if now == classes {
            return colours;
        }
        classes = now;
    }
}

fn distinct(c: &[usize]) -> usize {
    let mut s = c.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}
