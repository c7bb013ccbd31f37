//! Planarity testing, rotation systems and local sides at a vertex.
//!
//! `cargo run --example planarity`

use immersion_kit::embedding::{embed_planar, local_sides};
use immersion_kit::multigraph::families::{complete, complete_bipartite, wheel};

fn main() -> immersion_kit::Result<()> {
    for (name, g) in [("K4", complete(4)), ("W5", wheel(5)), ("K5", complete(5)), ("K3,3", complete_bipartite(3, 3))] {
        match embed_planar(&g)? {
            Some(rs) => println!("{name}: planar, {} faces, Euler holds: {}", rs.face_count(), rs.is_spherical()),
            None => println!("{name}: not planar"),
        }
    }

    let w = wheel(5);
    let rs = embed_planar(&w)?.unwrap();
    print!("rotation system of W5:\n{}", rs.to_text());
    let hub = w.vertices().max_by_key(|&v| w.degree(v)).unwrap();
    let rot = rs.rotation(hub).unwrap();
    for &probe in &rot[1..] {
        if probe == rot[2] {
            continue;
        }
        println!("edge {probe} lies on side {:?} of the path through {} and {}", local_sides(&rs, hub, rot[0], rot[2], probe)?, rot[0], rot[2]);
    }
    Ok(())
}
