//! Persistent edits on multigraphs: deletion, contraction, subdivision and
//! lifts, with stable ids.
//!
//! `cargo run --example multigraph_edits`

use immersion_kit::multigraph::write_graph;
use immersion_kit::{EdgeId, Item, MultiGraph, VertexId};

fn main() -> immersion_kit::Result<()> {
    let g = MultiGraph::from_edges(4, &[(0, 1), (0, 1), (1, 2), (2, 3), (3, 0)])?;
    print!("G:\n{}", write_graph(&g));

    let (c, merged) = g.contract(EdgeId(2))?;
    println!("contract e2 -> fresh vertex {merged}, {} edges", c.edge_count());

    let (l, e) = g.lift(EdgeId(2), EdgeId(3))?;
    println!("lift e2, e3 at v2 -> new edge {e} = {:?}", l.endpoints(e).unwrap());

    let d = g.delete(&[Item::Vertex(VertexId(3))])?;
    println!("delete v3 -> {} vertices, {} edges", d.vertex_count(), d.edge_count());

    let s = g.subdivide_all();
    println!("subdivide -> simple {}, max degree {}", s.is_simple(), s.max_degree());

    println!("lifting a parallel pair is refused: {:?}", g.lift(EdgeId(0), EdgeId(1)).err());
    println!("G itself is unchanged: {} edges", g.edge_count());
    Ok(())
}
