//! Exact branch-width by exhaustive search and the heuristic upper bound.
//!
//! `cargo run --release --example branchwidth`

use immersion_kit::branchwidth::{branchwidth_exact, branchwidth_exact_guarded, branchwidth_upper, cylinder, width_of};
use immersion_kit::multigraph::families::{complete, cycle, petersen};
use immersion_kit::Guard;

fn main() -> immersion_kit::Result<()> {
    for (name, g) in [("C6", cycle(6)), ("K4", complete(4)), ("(3,2)-cylinder", cylinder(3, 2)?)] {
        let (w, bd) = branchwidth_exact(&g)?;
        println!("{name}: exact {w}, witness width {}", width_of(&g, &bd)?);
    }
    let (w, bd) = branchwidth_exact_guarded(&complete(5), Guard::Off)?;
    println!("K5: exact {w}\n{bd}");

    // Above the exhaustive-search guard only the heuristic is available by default.
    println!("Petersen exact without override: {:?}", branchwidth_exact(&petersen()).map(|r| r.0));
    println!("Petersen heuristic: {}", branchwidth_upper(&petersen()).0);
    Ok(())
}
