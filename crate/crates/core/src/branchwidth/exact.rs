//! Exact branch-width by branch and bound over ternary trees built by leaf
//! insertion. Every ternary tree with m labelled leaves arises exactly once
//! by inserting leaves 3, 4, ..., m-1 into edges of the star on leaves
//! 0, 1, 2, and deleting a leaf never increases the width, so a partial
//! tree whose width already reaches the incumbent is cut off.

use std::collections::{BTreeMap, BTreeSet};

use super::upper::branchwidth_upper;
use super::BranchDecomposition;
use crate::error::{Error, Guard, Result};
use crate::multigraph::{EdgeId, MultiGraph, VertexId};

/// Default |E(G)| limit for exact search.
pub const EXACT_EDGE_GUARD: usize = 10;

pub fn branchwidth_exact(g: &MultiGraph) -> Result<(usize, BranchDecomposition)> {
    branchwidth_exact_guarded(g, Guard::Default)
}

pub fn branchwidth_exact_guarded(g: &MultiGraph, guard: Guard) -> Result<(usize, BranchDecomposition)> {
    branchwidth_exact_bounded(g, 0, guard)
}

/// Exact search that may stop as soon as it meets `lower`, a bound the
/// caller has proved (for example 3 when G has a K4 minor).
pub fn branchwidth_exact_bounded(g: &MultiGraph, lower: usize, guard: Guard) -> Result<(usize, BranchDecomposition)> {
    guard.check("exact branch-width edges", g.edge_count(), EXACT_EDGE_GUARD)?;
    if g.edge_count() > 64 {
        return Err(Error::Capacity {
            what: "exact branch-width edges (hard limit)",
            limit: 64,
            actual: g.edge_count(),
        });
    }
    let (upper, heuristic) = branchwidth_upper(g);
    let m = g.edge_count();
    if m <= 2 || upper <= lower {
        return Ok((upper, heuristic));
    }
    let order = insertion_order(g);
    let pos: BTreeMap<EdgeId, usize> = order.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let inc: Vec<u64> = g
        .vertices()
        .map(|v| g.incident(v).fold(0u64, |acc, e| acc | 1 << pos[&e]))
        .filter(|&bits| bits.count_ones() >= 2)
        .collect();
    let mut search = Search {
        m,
        inc,
        best: upper,
        best_tree: None,
        lower,
    };
    let c = m;
    let star = vec![(c, 0, 0b110u64), (c, 1, 0b101), (c, 2, 0b011)];
    let w = star.iter().map(|&(_, _, x)| search.mid(x, 0b111)).max().unwrap();
    if w < search.best {
        search.extend(3, star, 0b111);
    }
    match search.best_tree {
        None => Ok((upper, heuristic)),
        Some(tree) => {
            let edges: Vec<(usize, usize)> = tree.iter().map(|&(a, b, _)| (a, b)).collect();
            let leaves = (0..m).map(|i| (i, order[i])).collect();
            let bd = BranchDecomposition::from_tree(2 * m - 2, &edges, leaves)?;
            debug_assert_eq!(super::width_of(g, &bd)?, search.best);
            Ok((search.best, bd))
        }
    }
}

/// Edges ordered so each next edge touches as many already-used vertices as
/// possible (ties by id), which makes partial widths grow early.
fn insertion_order(g: &MultiGraph) -> Vec<EdgeId> {
    let mut touched: BTreeSet<VertexId> = BTreeSet::new();
    let mut left: Vec<(EdgeId, VertexId, VertexId)> = g.edges().collect();
    let mut out = Vec::with_capacity(left.len());
    while !left.is_empty() {
        let score = |&(_, u, v): &(EdgeId, VertexId, VertexId)| touched.contains(&u) as usize + touched.contains(&v) as usize;
        let best = (0..left.len())
            .max_by_key(|&i| (score(&left[i]), std::cmp::Reverse(left[i].0)))
            .unwrap();
        let (e, u, v) = left.remove(best);
        touched.insert(u);
        touched.insert(v);
        out.push(e);
    }
    out
}

type Tree = Vec<(usize, usize, u64)>;

struct Search {
    m: usize,
    inc: Vec<u64>,
    best: usize,
    best_tree: Option<Tree>,
    lower: usize,
}

impl Search {
    fn mid(&self, side: u64, inserted: u64) -> usize {
        let rest = inserted & !side;
        self.inc.iter().filter(|&&i| i & side != 0 && i & rest != 0).count()
    }

    /// Returns true once the lower bound has been met.
    fn extend(&mut self, k: usize, tree: Tree, inserted: u64) -> bool {
        if k == self.m {
            let w = tree.iter().map(|&(_, _, x)| self.mid(x, inserted)).max().unwrap();
            if w < self.best {
                self.best = w;
                self.best_tree = Some(tree);
            }
            return self.best <= self.lower;
        }
        let bit = 1u64 << k;
        let c = self.m + k - 2;
        for j in 0..tree.len() {
            let (a, b, side_a) = tree[j];
            let side_b = inserted & !side_a;
            let mut next = tree.clone();
            for (t, entry) in next.iter_mut().enumerate() {
                if t == j {
                    continue;
                }
                let y = inserted & !entry.2;
                if y & !side_a == 0 || y & !side_b == 0 {
                    entry.2 |= bit;
                }
            }
            next[j] = (a, c, side_a);
            next.push((c, b, side_a | bit));
            next.push((c, k, side_a | side_b));
            let now = inserted | bit;
            let w = next.iter().map(|&(_, _, x)| self.mid(x, now)).max().unwrap();
            if w < self.best && self.extend(k + 1, next, now) {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branchwidth::width_of;
    use crate::multigraph::families::*;

    #[test]
    fn ground_truths() {
        assert_eq!(branchwidth_exact(&path_graph(2)).unwrap().0, 0);
        for n in 3..=10 {
            assert_eq!(branchwidth_exact(&cycle(n)).unwrap().0, 2, "C{n}");
        }
        assert_eq!(branchwidth_exact(&complete(4)).unwrap().0, 3);
        assert_eq!(branchwidth_exact(&star(3)).unwrap().0, 1);
        assert_eq!(branchwidth_exact_guarded(&complete(5), Guard::Off).unwrap().0, 4);
    }

    #[test]
    fn witness_matches_reported_width() {
        for g in [complete(4), wheel(4), complete_bipartite(2, 3), cycle(2)] {
            let (w, bd) = branchwidth_exact(&g).unwrap();
            assert_eq!(width_of(&g, &bd).unwrap(), w);
        }
    }

    #[test]
    fn guard() {
        assert!(branchwidth_exact(&cycle(11)).is_err());
        assert_eq!(branchwidth_exact_guarded(&cycle(11), Guard::Limit(11)).unwrap().0, 2);
    }
}
