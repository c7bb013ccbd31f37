//! Isomorph-free enumeration of simple connected graphs by canonical
//! augmentation, and canonical forms.
//!
//! `cargo run --release --example enumerate`

use immersion_kit::generate::connected_graphs_up_to;
use immersion_kit::multigraph::{canonical_form, is_isomorphic, MultiGraph};

fn main() -> immersion_kit::Result<()> {
    for (i, level) in connected_graphs_up_to(7).iter().enumerate() {
        println!("n = {}: {} graphs", i + 1, level.len());
    }
    let a = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)])?;
    let b = MultiGraph::from_edges(4, &[(2, 0), (0, 3), (3, 1)])?;
    println!("P4 relabelled: isomorphic {}, same canonical form {}", is_isomorphic(&a, &b)?, canonical_form(&a) == canonical_form(&b));
    Ok(())
}
