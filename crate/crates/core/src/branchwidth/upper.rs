use std::collections::BTreeMap;

use super::BranchDecomposition;
use crate::multigraph::{EdgeId, MultiGraph};

/// Edge sets as bit vectors over the edge indices of a graph.
pub(super) struct Incidence {
    words: usize,
    /// Per vertex, the set of incident edge indices.
    inc: Vec<Vec<u64>>,
}

impl Incidence {
    pub fn new(g: &MultiGraph, ids: &[EdgeId]) -> Self {
        let words = ids.len().div_ceil(64).max(1);
        let pos: BTreeMap<EdgeId, usize> = ids.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let inc = g
            .vertices()
            .map(|v| {
                let mut bits = vec![0u64; words];
                for e in g.incident(v) {
                    let i = pos[&e];
                    bits[i / 64] |= 1 << (i % 64);
                }
                bits
            })
            .collect();
        Incidence { words, inc }
    }

    pub fn singleton(&self, i: usize) -> Vec<u64> {
        let mut bits = vec![0u64; self.words];
        bits[i / 64] |= 1 << (i % 64);
        bits
    }

    /// Middle-set size of `side` against the full edge set.
    pub fn mid(&self, side: &[u64]) -> usize {
        self.inc
            .iter()
            .filter(|inc| {
                let mut inside = false;
                let mut outside = false;
                for (a, b) in inc.iter().zip(side) {
                    inside |= a & b != 0;
                    outside |= a & !b != 0;
                }
                inside && outside
            })
            .count()
    }
}

/// Greedy bottom-up heuristic: repeatedly merge the two clusters whose
/// union has the smallest middle set. Returns the width of the result and
/// the decomposition itself; the width is an upper bound on branch-width.
pub fn branchwidth_upper(g: &MultiGraph) -> (usize, BranchDecomposition) {
    let ids: Vec<EdgeId> = g.edge_ids().collect();
    let m = ids.len();
    let bd = match m {
        0 => BranchDecomposition::from_tree(0, &[], BTreeMap::new()),
        1 => BranchDecomposition::from_tree(1, &[], BTreeMap::from([(0, ids[0])])),
        2 => BranchDecomposition::from_tree(2, &[(0, 1)], BTreeMap::from([(0, ids[0]), (1, ids[1])])),
        _ => {
            let inc = Incidence::new(g, &ids);
            let mut clusters: Vec<(usize, Vec<u64>)> = (0..m).map(|i| (i, inc.singleton(i))).collect();
            let mut tree = Vec::new();
            let mut next = m;
            while clusters.len() > 3 {
                let mut best: Option<(usize, usize, usize, usize)> = None;
                for i in 0..clusters.len() {
                    for j in i + 1..clusters.len() {
                        let union: Vec<u64> = clusters[i].1.iter().zip(&clusters[j].1).map(|(a, b)| a | b).collect();
                        let w = inc.mid(&union);
                        let size: usize = union.iter().map(|x| x.count_ones() as usize).sum();
                        if best.is_none_or(|(bw, bs, _, _)| (w, size) < (bw, bs)) {
                            best = Some((w, size, i, j));
                        }
                    }
                }
                let (_, _, i, j) = best.unwrap();
                let (nj, bj) = clusters.swap_remove(j);
                let (ni, bi) = clusters.swap_remove(i);
                tree.push((next, ni));
                tree.push((next, nj));
                let union = bi.iter().zip(&bj).map(|(a, b)| a | b).collect();
                clusters.push((next, union));
                next += 1;
            }
            for (node, _) in &clusters {
                tree.push((next, *node));
            }
            let leaves = (0..m).map(|i| (i, ids[i])).collect();
            BranchDecomposition::from_tree(next + 1, &tree, leaves)
        }
    }
    .expect("heuristic builds a tree");
    let width = super::width_of(g, &bd).expect("heuristic decomposition is valid");
    (width, bd)
}
