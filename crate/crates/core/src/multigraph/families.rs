//! Named graphs. Vertices are `0..n`; edge ids follow the listed order.

use super::{MultiGraph, VertexId};

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> MultiGraph {
    let mut g = MultiGraph::with_vertices(n);
    for (u, v) in edges {
        g.add_edge(VertexId(u as u32), VertexId(v as u32)).expect("valid family edge");
    }
    g
}

/// K_n, edges in lexicographic order.
pub fn complete(n: usize) -> MultiGraph {
    build(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// K_{r,q} with parts `0..r` and `r..r+q`.
pub fn complete_bipartite(r: usize, q: usize) -> MultiGraph {
    build(r + q, (0..r).flat_map(|i| (0..q).map(move |j| (i, r + j))))
}

/// C_n for n ≥ 3; n = 2 gives a double edge.
pub fn cycle(n: usize) -> MultiGraph {
    build(n, (0..n).map(|i| (i, (i + 1) % n)).map(|(a, b)| (a.min(b), a.max(b))))
}

/// Path on `n` vertices.
pub fn path_graph(n: usize) -> MultiGraph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

/// K_{1,k}: centre 0, leaves `1..=k`.
pub fn star(k: usize) -> MultiGraph {
    build(k + 1, (1..=k).map(|i| (0, i)))
}

/// Wheel with hub 0 and rim `1..=k`.
pub fn wheel(k: usize) -> MultiGraph {
    build(
        k + 1,
        (1..=k).map(|i| (0, i)).chain((1..=k).map(|i| (i, i % k + 1))),
    )
}

pub fn petersen() -> MultiGraph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    build(10, outer.chain(spokes).chain(inner))
}

/// The 3-cube Q3; vertices are the bit patterns `0..8`.
pub fn cube() -> MultiGraph {
    build(
        8,
        (0..8usize).flat_map(|a| [1usize, 2, 4].into_iter().map(move |bit| (a, a ^ bit))).filter(|(a, b)| a < b),
    )
}

/// Disjoint union of `g` and `h`; `h`'s vertices are shifted past `g`'s.
/// Only meaningful for compact graphs (vertices `0..n`).
pub fn disjoint_union(g: &MultiGraph, h: &MultiGraph) -> MultiGraph {
    let shift = g.vertex_count();
    let mut out = build(
        shift + h.vertex_count(),
        g.edges().map(|(_, u, v)| (u.0 as usize, v.0 as usize)),
    );
    for (_, u, v) in h.edges() {
        out.add_edge(VertexId(u.0 + shift as u32), VertexId(v.0 + shift as u32))
            .expect("shifted endpoints exist");
    }
    out
}

/// Two copies of K4 joined by a perfect matching between three corners of
/// each: vertices `0..4` and `4..8`, joining edges `{i, i+4}` for i < 3
/// (edge ids 12, 13, 14).
pub fn twin_k4_bridged() -> MultiGraph {
    let mut g = disjoint_union(&complete(4), &complete(4));
    for i in 0..3u32 {
        g.add_edge(VertexId(i), VertexId(i + 4)).unwrap();
    }
    g
}

/// K4 plus one extra vertex (id 4) adjacent to the corners 0, 1, 2.
pub fn k4_with_apex() -> MultiGraph {
    let mut g = complete(4);
    let apex = g.add_vertex();
    for i in 0..3 {
        g.add_edge(VertexId(i), apex).unwrap();
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(complete_bipartite(3, 3).edge_count(), 9);
        assert_eq!(petersen().edge_count(), 15);
        assert_eq!(petersen().degree_sequence(), vec![3; 10]);
        assert_eq!(cube().edge_count(), 12);
        assert_eq!(wheel(4).edge_count(), 8);
        assert_eq!(twin_k4_bridged().edge_count(), 15);
        assert_eq!(cycle(2).edge_count(), 2);
    }
}
