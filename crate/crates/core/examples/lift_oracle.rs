//! Cross-checks model search against brute-force lift closure on every
//! simple graph with at most five vertices.
//!
//! `cargo run --release --example lift_oracle`

use immersion_kit::generate::connected_graphs_up_to;
use immersion_kit::multigraph::families::{complete, cycle, star};
use immersion_kit::relations::{contains_immersion, oracle_immersion_by_lifts};

fn main() -> immersion_kit::Result<()> {
    let patterns = [("K3", complete(3)), ("C4", cycle(4)), ("K1,3", star(3)), ("K4", complete(4))];
    let mut agree = 0;
    for g in connected_graphs_up_to(5).into_iter().flatten() {
        for (name, h) in &patterns {
            let search = contains_immersion(&g, h, false)?.is_some();
            let oracle = oracle_immersion_by_lifts(&g, h)?;
            assert_eq!(search, oracle, "{name} in {g:?}");
            agree += 1;
        }
    }
    println!("{agree} (host, pattern) pairs agree");
    Ok(())
}
