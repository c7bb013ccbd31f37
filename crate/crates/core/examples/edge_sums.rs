//! Internal edge cuts, F-splits and the edge sum that undoes them.
//!
//! `cargo run --example edge_sums`

use immersion_kit::connectivity::{edge_connectivity, edge_sum, find_internal_cut, split};
use immersion_kit::multigraph::families::twin_k4_bridged;
use immersion_kit::multigraph::write_graph;

fn main() -> immersion_kit::Result<()> {
    let g = twin_k4_bridged();
    println!("two K4s joined by three edges: {} vertices, {} edges, λ = {}", g.vertex_count(), g.edge_count(), edge_connectivity(&g));

    let cut = find_internal_cut(&g, 3)?.expect("the bridge edges form an internal 3-cut");
    println!("cut {:?}, sides {:?} | {:?}", cut.edges, cut.side_a, cut.side_b);

    let record = split(&g, &cut)?;
    print!("{}", record.to_text());
    println!("piece A:\n{}", write_graph(&record.component_a));

    let back = edge_sum(&record.component_a, record.new_vertex_a, &record.component_b, record.new_vertex_b, &record.pairing)?;
    assert_eq!(back, g);
    println!("edge sum restores the original ids exactly");
    Ok(())
}
