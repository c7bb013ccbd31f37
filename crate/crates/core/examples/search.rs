//! Exhaustive search for small non-subcubic, {K5, K3,3}-immersion-free
//! graphs of branch-width at least three.
//!
//! `cargo run --release --example search`

use immersion_kit::search::{search, SearchQuery, SearchReport};
use immersion_kit::Guard;

fn main() -> immersion_kit::Result<()> {
    let query = SearchQuery { max_n: 6, bw_at_least: 3, non_subcubic: true, immersion_free_only: true };
    let report = search(query, Guard::Default)?;
    println!("{report}");
    let text = report.to_text();
    let reread = SearchReport::parse(&text)?;
    reread.reverify().map_err(|(_, e)| e)?;
    println!("{} graphs re-verified from the report text", reread.results.len());
    Ok(())
}
