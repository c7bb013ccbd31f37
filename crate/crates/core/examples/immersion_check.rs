//! Immersion, strong immersion and topological-minor containment, with
//! re-validated witnesses.
//!
//! `cargo run --example immersion_check`

use immersion_kit::multigraph::families::{complete, complete_bipartite, petersen, wheel};
use immersion_kit::relations::{find_model, kuratowski_immersion, Mode};
use immersion_kit::Guard;

fn main() -> immersion_kit::Result<()> {
    let k33 = complete_bipartite(3, 3);
    let host = petersen();
    for mode in [Mode::Weak, Mode::Strong, Mode::Topological] {
        match find_model(&host, &k33, mode, Guard::Default)? {
            Some(model) => {
                model.validate(&host, &k33, mode)?;
                println!("Petersen contains K3,3 ({mode:?}):\n{model}");
            }
            None => println!("Petersen does not contain K3,3 ({mode:?})"),
        }
    }

    // Every wheel is planar, but the larger ones immerse K3,3: immersion
    // containment does not respect planarity.
    for k in [4, 6, 8] {
        let w = wheel(k);
        let verdict = match kuratowski_immersion(&w, Guard::Default)? {
            Some((which, _)) => format!("immerses {which}"),
            None => "is {K5, K3,3}-immersion-free".to_string(),
        };
        println!("W{k} {verdict}");
    }
    println!("K5 in K5: {}", find_model(&complete(5), &complete(5), Mode::Weak, Guard::Default)?.is_some());
    Ok(())
}
