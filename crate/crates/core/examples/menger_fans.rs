//! Edge-disjoint path fans from a vertex to several targets.
//!
//! `cargo run --example menger_fans`

use immersion_kit::connectivity::menger_fan;
use immersion_kit::multigraph::families::{cube, path_graph};
use immersion_kit::VertexId;

fn main() -> immersion_kit::Result<()> {
    let g = cube();
    let targets = [VertexId(3), VertexId(5), VertexId(6)];
    let fan = menger_fan(&g, VertexId(0), &targets)?.expect("the cube is 3-edge-connected");
    for p in &fan {
        println!("{} -> {}: {:?}", p.start(), p.end(), p.vertices());
    }

    // Two targets behind a single edge: no fan.
    let p = path_graph(4);
    let none = menger_fan(&p, VertexId(1), &[VertexId(2), VertexId(3)]);
    println!("path, root 1, targets 2 and 3: {none:?}");
    Ok(())
}
