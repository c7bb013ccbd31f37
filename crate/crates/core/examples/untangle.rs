//! Turning an edge-disjoint fan on an embedded planar host into a
//! confluent, pairwise well-arranged one.
//!
//! `cargo run --example untangle`

use immersion_kit::confluence::{overlap_report, untangle_traced, PathFan};
use immersion_kit::embedding::embed_planar;
use immersion_kit::generate::random_planar;
use immersion_kit::VertexId;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> immersion_kit::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut shown = 0;
    for _ in 0..2000 {
        let host = random_planar(&mut rng, 10, 30, true);
        let rs = embed_planar(&host)?;
        let root = host.vertices().max_by_key(|&v| host.degree(v)).unwrap();
        let terminals: Vec<VertexId> = host.vertices().filter(|&v| v != root).take(3).collect();
        let Some(fan) = PathFan::from_menger(host, rs, root, terminals)? else { continue };
        let before = overlap_report(&fan)?;
        if before.is_confluent() {
            continue;
        }
        let (after, trace) = untangle_traced(&fan)?;
        println!("input fan (g = {}):\n{fan}", before.g);
        println!("untangled fan (g = {}):\n{after}", overlap_report(&after)?.g);
        println!("g trace {:?}, dropped edges {:?}\n", trace.g_values, trace.removed_edges);
        shown += 1;
        if shown == 2 {
            break;
        }
    }
    Ok(())
}
