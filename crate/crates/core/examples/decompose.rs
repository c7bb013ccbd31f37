//! Decomposing a multigraph along internal edge cuts of size at most three,
//! writing the certificate and checking it independently.
//!
//! `cargo run --example decompose`

use immersion_kit::decomposer::{decompose, leaf_histogram, parse_certificate, recompose_all, verify_certificate, write_certificate};
use immersion_kit::multigraph::families::{cube, disjoint_union, twin_k4_bridged};

fn main() -> immersion_kit::Result<()> {
    let g = disjoint_union(&twin_k4_bridged(), &cube());
    let trees = decompose(&g)?;
    for (class, count) in leaf_histogram(&trees) {
        println!("{count} leaf/leaves: {class}");
    }
    assert_eq!(recompose_all(&trees)?, g);

    let text = write_certificate(&trees);
    println!("{} certificate lines", text.lines().count());
    let report = verify_certificate(&g, &parse_certificate(&text)?);
    print!("{report}");
    Ok(())
}
