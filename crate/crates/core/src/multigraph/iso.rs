use std::collections::BTreeMap;

use super::MultiGraph;
use crate::error::{Guard, Result};

/// Default vertex-count guard for [`is_isomorphic`].
pub const ISOMORPHISM_GUARD: usize = 12;

pub fn is_isomorphic(g: &MultiGraph, h: &MultiGraph) -> Result<bool> {
    is_isomorphic_guarded(g, h, Guard::Default)
}

/// Backtracking isomorphism test: joint colour refinement by degree and
/// neighbour multiset, then a search over colour-preserving bijections that
/// checks edge multiplicities pair by pair.
pub fn is_isomorphic_guarded(g: &MultiGraph, h: &MultiGraph, guard: Guard) -> Result<bool> {
    guard.check("isomorphism test", g.vertex_count().max(h.vertex_count()), ISOMORPHISM_GUARD)?;
    if g.vertex_count() != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(false);
    }
    let (_, a) = g.adjacency_matrix();
    let (_, b) = h.adjacency_matrix();
    let n = a.len();
    let (ca, cb) = joint_refine(&a, &b);
    let mut hist_a = ca.clone();
    let mut hist_b = cb.clone();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return Ok(false);
    }
    // Map vertices of rarest colour first.
    let mut class_size: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &ca {
        *class_size.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[&ca[v]], ca[v], v));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(0, &order, &a, &b, &ca, &cb, &mut image, &mut used))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    depth: usize,
    order: &[usize],
    a: &[Vec<u32>],
    b: &[Vec<u32>],
    ca: &[usize],
    cb: &[usize],
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..b.len() {
        if used[w] || cb[w] != ca[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| a[v][u] == b[w][image[u]]);
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend(depth + 1, order, a, b, ca, cb, image, used) {
            return true;
        }
        used[w] = false;
    }
    image[v] = usize::MAX;
    false
}

/// Colour refinement run on both graphs with a shared signature table so that
/// colour names are comparable.
fn joint_refine(a: &[Vec<u32>], b: &[Vec<u32>]) -> (Vec<usize>, Vec<usize>) {
    let degree = |m: &[Vec<u32>]| -> Vec<usize> {
        m.iter().map(|row| row.iter().map(|&x| x as usize).sum()).collect()
    };
    let mut ca = degree(a);
    let mut cb = degree(b);
    loop {
        let sig = |m: &[Vec<u32>], c: &[usize]| -> Vec<(usize, Vec<(usize, u32)>)> {
            (0..m.len())
                .map(|v| {
                    let mut nb: Vec<(usize, u32)> =
                        (0..m.len()).filter(|&u| m[v][u] > 0).map(|u| (c[u], m[v][u])).collect();
                    nb.sort_unstable();
                    (c[v], nb)
                })
                .collect()
        };
        let sa = sig(a, &ca);
        let sb = sig(b, &cb);
        let mut table: Vec<&(usize, Vec<(usize, u32)>)> = sa.iter().chain(sb.iter()).collect();
        table.sort();
        table.dedup();
        let rank = |s: &(usize, Vec<(usize, u32)>)| table.binary_search(&s).unwrap();
        let na: Vec<usize> = sa.iter().map(rank).collect();
        let nb: Vec<usize> = sb.iter().map(rank).collect();
        let classes = |c: &[usize]| {
            let mut s = c.to_vec();
            s.sort_unstable();
            s.dedup();
            s.len()
        };
        let stable = classes(&na) == classes(&ca) && classes(&nb) == classes(&cb);
        ca = na;
        cb = nb;
        if stable {
            return (ca, cb);
        }
    }
}
