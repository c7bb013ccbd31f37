use immersion_kit::multigraph::{canonical_form, is_isomorphic, parse_graph, write_graph};
use immersion_kit::{EdgeId, Item, MultiGraph, VertexId};
use proptest::prelude::*;

fn multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = MultiGraph> {
    (2..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n as u32, 0..n as u32), 0..=max_m).prop_map(move |pairs| {
            let mut g = MultiGraph::with_vertices(n);
            for (u, v) in pairs {
                if u != v {
                    g.add_edge(VertexId(u), VertexId(v)).unwrap();
                }
            }
            g
        })
    })
}

fn relabeled(g: &MultiGraph, shift: u32) -> MultiGraph {
    let n = g.vertex_count() as u32;
    let mut h = MultiGraph::with_vertices(n as usize);
    for (_, u, v) in g.edges() {
        h.add_edge(VertexId((u.0 + shift) % n), VertexId((v.0 + shift) % n)).unwrap();
    }
    h
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn contraction_drops_exactly_the_parallel_class(g in multigraph(8, 20), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.edge_count() > 0);
        let edges: Vec<_> = g.edges().collect();
        let (e, u, v) = edges[pick.index(edges.len())];
        let (h, merged) = g.contract(e).unwrap();
        prop_assert_eq!(h.edge_count(), g.edge_count() - g.multiplicity(u, v));
        prop_assert_eq!(h.vertex_count(), g.vertex_count() - 1);
        prop_assert_eq!(h.degree(merged), g.degree(u) + g.degree(v) - 2 * g.multiplicity(u, v));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn edits_leave_the_input_unchanged(g in multigraph(8, 16), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let before = g.clone();
        let before_text = write_graph(&g);
        let vs: Vec<VertexId> = g.vertices().collect();
        let _ = g.delete(&[Item::Vertex(vs[a.index(vs.len())])]).unwrap();
        let _ = g.subdivide_all();
        let _ = g.simplify();
        if g.edge_count() > 0 {
            let es: Vec<EdgeId> = g.edge_ids().collect();
            let e1 = es[a.index(es.len())];
            let e2 = es[b.index(es.len())];
            let _ = g.delete_edges(&[e1]).unwrap();
            let _ = g.contract(e1).unwrap();
            let _ = g.lift(e1, e2);
        }
        prop_assert_eq!(&g, &before);
        prop_assert_eq!(write_graph(&g), before_text);
    }

    #[test]
    fn subdivision_is_simple_with_expected_max_degree(g in multigraph(8, 16)) {
        let s = g.subdivide_all();
        prop_assert!(s.is_simple());
        let expected = if g.edge_count() == 0 { 0 } else { g.max_degree().max(2) };
        prop_assert_eq!(s.max_degree(), expected);
        prop_assert_eq!(s.edge_count(), 2 * g.edge_count());
        prop_assert_eq!(s.vertex_count(), g.vertex_count() + g.edge_count());
    }

    #[test]
    fn lifting_through_a_subdivision_vertex_undoes_it(g in multigraph(7, 12), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.edge_count() > 0);
        let s = g.subdivide_all();
        let new: Vec<VertexId> = s.vertices().filter(|v| !g.contains_vertex(*v)).collect();
        prop_assert_eq!(new.len(), g.edge_count());
        // Undo one subdivision vertex, then all of them.
        let w = new[pick.index(new.len())];
        let at_w: Vec<EdgeId> = s.incident(w).collect();
        let (lifted, _) = s.lift(at_w[0], at_w[1]).unwrap();
        let one = lifted.delete_vertices(&[w]).unwrap();
        prop_assert_eq!(one.edge_count(), s.edge_count() - 1);
        let mut back = s.clone();
        for &w in &new {
            let at_w: Vec<EdgeId> = back.incident(w).collect();
            let (lifted, _) = back.lift(at_w[0], at_w[1]).unwrap();
            back = lifted.delete_vertices(&[w]).unwrap();
        }
        prop_assert!(is_isomorphic(&back, &g).unwrap());
    }

    #[test]
    fn isomorphism_is_an_equivalence(g in multigraph(7, 12), h in multigraph(7, 12), shift in 0u32..7) {
        prop_assert!(is_isomorphic(&g, &g).unwrap());
        let r = relabeled(&g, shift);
        prop_assert!(is_isomorphic(&g, &r).unwrap());
        prop_assert!(is_isomorphic(&r, &g).unwrap());
        prop_assert_eq!(is_isomorphic(&g, &h).unwrap(), is_isomorphic(&h, &g).unwrap());
        if is_isomorphic(&g, &h).unwrap() {
            prop_assert!(is_isomorphic(&r, &h).unwrap());
        }
        prop_assert_eq!(is_isomorphic(&g, &h).unwrap(), canonical_form(&g) == canonical_form(&h));
    }

    #[test]
    fn text_format_round_trips(g in multigraph(8, 16)) {
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        // Edge lines are written sorted, so ids may be permuted.
        prop_assert_eq!(write_graph(&back), text);
        prop_assert!(is_isomorphic(&back, &g).unwrap());
    }
}

#[test]
fn lift_rejects_parallel_pairs_and_non_adjacent_edges() {
    let g = MultiGraph::from_edges(4, &[(0, 1), (0, 1), (2, 3)]).unwrap();
    assert!(g.lift(EdgeId(0), EdgeId(1)).is_err());
    assert!(g.lift(EdgeId(0), EdgeId(2)).is_err());
    assert!(g.lift(EdgeId(0), EdgeId(0)).is_err());
}

#[test]
fn deleted_ids_are_never_reused() {
    let g = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let mut h = g.delete(&[Item::Edge(EdgeId(1)), Item::Vertex(VertexId(2))]).unwrap();
    let v = h.add_vertex();
    let e = h.add_edge(VertexId(0), v).unwrap();
    assert_eq!(v, VertexId(3));
    assert_eq!(e, EdgeId(2));
}
