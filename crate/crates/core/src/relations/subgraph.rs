use std::collections::BTreeMap;

use crate::multigraph::{MultiGraph, VertexId};

/// An injective map V(pattern) → V(host) under which every pattern
/// multiplicity is at most the host multiplicity (a not necessarily induced
/// sub-multigraph).
pub fn find_subgraph(host: &MultiGraph, pattern: &MultiGraph) -> Option<BTreeMap<VertexId, VertexId>> {
    let (hv, hm) = host.adjacency_matrix();
    let (pv, pm) = pattern.adjacency_matrix();
    let (n, k) = (hv.len(), pv.len());
    if k > n || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let hdeg: Vec<u32> = hm.iter().map(|r| r.iter().sum()).collect();
    let pdeg: Vec<u32> = pm.iter().map(|r| r.iter().sum()).collect();
    // Highest degree first, then vertices with the most already-placed neighbours.
    let mut order: Vec<usize> = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    for _ in 0..k {
        let next = (0..k)
            .filter(|&i| !placed[i])
            .max_by_key(|&i| {
                let links = order.iter().filter(|&&j| pm[i][j] > 0).count();
                (links, pdeg[i], std::cmp::Reverse(i))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; n];
    fn extend(
        d: usize,
        order: &[usize],
        pm: &[Vec<u32>],
        hm: &[Vec<u32>],
        pdeg: &[u32],
        hdeg: &[u32],
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if d == order.len() {
            return true;
        }
        let u = order[d];
        for x in 0..hm.len() {
            if used[x] || hdeg[x] < pdeg[u] {
                continue;
            }
            if order[..d].iter().any(|&w| pm[u][w] > hm[x][image[w]]) {
                continue;
            }
            image[u] = x;
            used[x] = true;
            if extend(d + 1, order, pm, hm, pdeg, hdeg, image, used) {
                return true;
            }
            used[x] = false;
        }
        false
    }
    extend(0, &order, &pm, &hm, &pdeg, &hdeg, &mut image, &mut used)
        .then(|| (0..k).map(|i| (pv[i], hv[image[i]])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::families::*;

    #[test]
    fn triangle_in_k4_not_in_c4() {
        assert!(find_subgraph(&complete(4), &complete(3)).is_some());
        assert!(find_subgraph(&cycle(4), &complete(3)).is_none());
    }

    #[test]
    fn multiplicity_is_respected() {
        assert!(find_subgraph(&complete(4), &cycle(2)).is_none());
        let g = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (1, 2)]).unwrap();
        let m = find_subgraph(&g, &cycle(2)).unwrap();
        let image: Vec<VertexId> = m.values().copied().collect();
        assert_eq!(g.multiplicity(image[0], image[1]), 2);
    }
}
