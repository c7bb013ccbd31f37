//! End-to-end acceptance suite. Each test prints one `criterion N: PASS|FAIL`
//! line to stderr (bypassing output capture) and then asserts.

mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

use immersion_kit::branchwidth::{branchwidth_exact, branchwidth_exact_guarded};
use immersion_kit::confluence::{is_pairwise_well_arranged, overlap_report, untangle_traced};
use immersion_kit::connectivity::{find_internal_cut, menger_fan};
use immersion_kit::decomposer::{decompose, recompose, recompose_all, DecompositionTree};
use immersion_kit::embedding::is_planar;
use immersion_kit::generate::{connected_graphs_up_to, random_connected_multigraph};
use immersion_kit::multigraph::families::{complete, complete_bipartite, cycle, path_graph, star};
use immersion_kit::relations::{
    contains_immersion, contains_minor, contains_topological_minor, is_kuratowski_immersion_free,
    oracle_immersion_by_lifts,
};
use immersion_kit::search::{search, SearchQuery, SearchReport};
use immersion_kit::{Guard, MultiGraph, VertexId};
use rand::Rng;

fn report(n: u32, ok: bool, elapsed: Duration, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    let _ = writeln!(
        std::io::stderr(),
        "criterion {n}: {verdict} ({:.1}s) {detail}",
        elapsed.as_secs_f64()
    );
}

fn finish(n: u32, start: Instant, failures: &[String], detail: &str) {
    report(n, failures.is_empty(), start.elapsed(), detail);
    assert!(failures.is_empty(), "criterion {n}: {} violation(s), first: {}", failures.len(), failures[0]);
}

#[test]
fn criterion_01_immersion_matches_lift_oracle() {
    let start = Instant::now();
    let patterns = [
        ("K2", complete(2)),
        ("K3", complete(3)),
        ("C4", cycle(4)),
        ("K1,3", star(3)),
        ("K4", complete(4)),
    ];
    let hosts: Vec<MultiGraph> = (1..=5).flat_map(|n| common::all_multigraphs(n, 1, false)).collect();
    let mut failures = Vec::new();
    let mut checks = 0;
    for g in &hosts {
        for (name, h) in &patterns {
            let fast = contains_immersion(g, h, false).unwrap();
            if let Some(model) = &fast {
                model.validate(g, h, immersion_kit::relations::Mode::Weak).unwrap();
            }
            let oracle = oracle_immersion_by_lifts(g, h).unwrap();
            checks += 1;
            if fast.is_some() != oracle {
                failures.push(format!("{name} in {g:?}: search {} oracle {oracle}", fast.is_some()));
            }
        }
    }
    let ok_time = start.elapsed() < Duration::from_secs(300);
    if !ok_time {
        failures.push("runtime above 5 minutes".into());
    }
    finish(1, start, &failures, &format!("{} hosts, {checks} pairs, {} disagreements", hosts.len(), failures.len()));
}

#[test]
fn criterion_02_planarity_matches_kuratowski() {
    let start = Instant::now();
    let k5 = complete(5);
    let k33 = complete_bipartite(3, 3);
    let mut failures = Vec::new();
    let mut total = 0;
    for level in connected_graphs_up_to(7) {
        for g in level {
            total += 1;
            let obstructed = contains_topological_minor(&g, &k5).unwrap().is_some()
                || contains_topological_minor(&g, &k33).unwrap().is_some();
            if is_planar(&g) == obstructed {
                failures.push(format!("{g:?}: planar {} obstructed {obstructed}", is_planar(&g)));
            }
        }
    }
    finish(2, start, &failures, &format!("{total} graphs, {} disagreements", failures.len()));
}

/// Checks both pieces of every split node; returns the number of splits.
fn check_split_pieces(t: &DecompositionTree, failures: &mut Vec<String>) -> usize {
    match t {
        DecompositionTree::Leaf { .. } => 0,
        DecompositionTree::Split { left, right, .. } => {
            for piece in [left, right] {
                let g = recompose(piece).unwrap();
                if !is_kuratowski_immersion_free(&g).unwrap().0 {
                    failures.push(format!("piece {g:?} immerses a Kuratowski graph"));
                }
            }
            1 + check_split_pieces(left, failures) + check_split_pieces(right, failures)
        }
    }
}

#[test]
fn criteria_03_04_splits_and_leaves_of_immersion_free_graphs() {
    let start = Instant::now();
    let mut rng = common::rng(3);
    let (graphs, rejected) = common::immersion_free_samples(&mut rng, 300, 20);
    let mut split_failures = Vec::new();
    let mut leaf_failures = Vec::new();
    let mut splits = 0;
    let mut leaves = 0;
    for g in &graphs {
        let trees = decompose(g).unwrap();
        for t in &trees {
            splits += check_split_pieces(t, &mut split_failures);
            for (leaf, cert) in t.leaves() {
                leaves += 1;
                if !cert.is_certified() {
                    leaf_failures.push(format!("uncertified leaf {leaf:?}"));
                }
            }
        }
    }
    let t3 = start.elapsed();
    if t3 > Duration::from_secs(1800) {
        split_failures.push("runtime above 30 minutes".into());
    }
    report(
        3,
        split_failures.is_empty(),
        t3,
        &format!(
            "{} samples ({rejected} rejected draws), {splits} splits, {} violations",
            graphs.len(),
            split_failures.len()
        ),
    );
    report(
        4,
        leaf_failures.is_empty(),
        start.elapsed(),
        &format!("{leaves} leaves, {} uncertified", leaf_failures.len()),
    );
    assert!(split_failures.is_empty(), "{split_failures:?}");
    assert!(leaf_failures.is_empty(), "{leaf_failures:?}");
}

#[test]
fn criterion_05_recompose_inverts_decompose() {
    let start = Instant::now();
    let mut rng = common::rng(5);
    let mut failures = Vec::new();
    let mut splits = 0;
    for _ in 0..500 {
        let n = rng.gen_range(2..=12);
        let m = rng.gen_range(n - 1..=30);
        let g = random_connected_multigraph(&mut rng, n, m);
        let trees = decompose(&g).unwrap();
        splits += trees.iter().map(|t| t.split_count()).sum::<usize>();
        let back = recompose_all(&trees).unwrap();
        let edges = |h: &MultiGraph| h.edges().collect::<Vec<_>>();
        let vertices = |h: &MultiGraph| h.vertices().collect::<Vec<_>>();
        if edges(&back) != edges(&g) || vertices(&back) != vertices(&g) {
            failures.push(format!("{g:?}"));
        }
    }
    finish(5, start, &failures, &format!("500 graphs, {splits} splits, {} mismatches", failures.len()));
}

#[test]
fn criterion_06_branchwidth_ground_truths() {
    let start = Instant::now();
    let mut cases: Vec<(String, MultiGraph, usize, Guard)> = vec![("K2".into(), path_graph(2), 0, Guard::Default)];
    for n in 3..=10 {
        cases.push((format!("C{n}"), cycle(n), 2, Guard::Default));
    }
    cases.push(("K4".into(), complete(4), 3, Guard::Default));
    cases.push(("K5".into(), complete(5), 4, Guard::Off));
    let mut failures = Vec::new();
    for (name, g, want, guard) in &cases {
        let (w, bd) = branchwidth_exact_guarded(g, *guard).unwrap();
        bd.validate(g).unwrap();
        if w != *want {
            failures.push(format!("{name}: got {w}, expected {want}"));
        }
    }
    finish(6, start, &failures, &format!("{} graphs, {} mismatches", cases.len(), failures.len()));
}

#[test]
fn criterion_07_triangle_minor_free_planar_graphs_have_small_width() {
    let start = Instant::now();
    let triangle = complete(3);
    let mut failures = Vec::new();
    let mut tested = 0;
    for g in common::simple_graphs_by_edges(8) {
        if !is_planar(&g) || contains_minor(&g, &triangle).unwrap().is_some() {
            continue;
        }
        tested += 1;
        let (w, _) = branchwidth_exact(&g).unwrap();
        if w > 3 {
            failures.push(format!("{g:?} has branch-width {w}"));
        }
    }
    finish(7, start, &failures, &format!("{tested} graphs, {} violations", failures.len()));
}

#[test]
fn criterion_08_untangle_reaches_confluent_fans() {
    let start = Instant::now();
    let mut rng = common::rng(8);
    let mut failures = Vec::new();
    let mut tangled = 0;
    let mut exchanges = 0;
    // Half the sample is conditioned on g > 0: fans straight from
    // menger_fan are rarely tangled.
    for k in 0..100 {
        let fan = if k < 50 {
            common::random_tangled_fan(&mut rng, 12)
        } else {
            common::random_embedded_fan(&mut rng, 12)
        };
        let g0 = overlap_report(&fan).unwrap().g;
        if g0 > 0 {
            tangled += 1;
        }
        let (out, trace) = match untangle_traced(&fan) {
            Ok(x) => x,
            Err(e) => {
                failures.push(format!("fan {k}: {e}"));
                continue;
            }
        };
        exchanges += trace.g_values.len() - 1;
        let mut problems = Vec::new();
        if overlap_report(&out).unwrap().g != 0 {
            problems.push("g > 0");
        }
        if !is_pairwise_well_arranged(&out).unwrap() {
            problems.push("not well-arranged");
        }
        if out.root() != fan.root() || out.terminals() != fan.terminals() {
            problems.push("endpoints changed");
        }
        if !out.edge_set().is_subset(&fan.edge_set()) {
            problems.push("edges outside the input");
        }
        if !trace.g_values.windows(2).all(|w| w[1] < w[0]) || trace.g_values.last() != Some(&0) {
            problems.push("g not strictly decreasing to 0");
        }
        if !problems.is_empty() {
            failures.push(format!("fan {k}: {}", problems.join(", ")));
        }
    }
    finish(
        8,
        start,
        &failures,
        &format!("100 fans ({tangled} with g > 0, {exchanges} exchanges), {} violations", failures.len()),
    );
}

/// Checks every Menger instance on `g` allowed by the cut condition.
/// Returns the number of instances.
fn menger_instances(g: &MultiGraph, failures: &mut Vec<String>) -> usize {
    let vertices: Vec<VertexId> = g.vertices().collect();
    let mut count = 0;
    for i in 1..=3usize.min(vertices.len() - 1) {
        if i > 1 && find_internal_cut(g, i - 1).unwrap().is_some() {
            continue;
        }
        for &v in &vertices {
            if g.degree(v) < i {
                continue;
            }
            let others: Vec<VertexId> = vertices.iter().copied().filter(|&x| x != v).collect();
            for targets in subsets(&others, i) {
                count += 1;
                match menger_fan(g, v, &targets).unwrap() {
                    None => failures.push(format!("{g:?}: no fan from {v} to {targets:?}")),
                    Some(paths) => {
                        let mut used = BTreeSet::new();
                        let mut ends = BTreeSet::new();
                        let valid = paths.len() == i
                            && paths.iter().all(|p| {
                                p.validate(g).is_ok()
                                    && p.start() == v
                                    && targets.contains(&p.end())
                                    && ends.insert(p.end())
                                    && p.edges().iter().all(|&e| used.insert(e))
                            });
                        if !valid {
                            failures.push(format!("{g:?}: invalid fan from {v} to {targets:?}"));
                        }
                    }
                }
            }
        }
    }
    count
}

fn subsets(items: &[VertexId], k: usize) -> Vec<Vec<VertexId>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in subsets(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

#[test]
fn criterion_09_menger_fans_exist_without_small_internal_cuts() {
    let start = Instant::now();
    let mut suite: Vec<MultiGraph> = Vec::new();
    for level in connected_graphs_up_to(6) {
        suite.extend(level);
    }
    for n in 2..=5 {
        suite.extend(common::all_multigraphs(n, 2, true).into_iter().filter(|g| !g.is_simple()));
    }
    for n in 2..=4 {
        suite.extend(
            common::all_multigraphs(n, 3, true)
                .into_iter()
                .filter(|g| g.vertices().any(|u| g.vertices().any(|v| g.multiplicity(u, v) == 3))),
        );
    }
    let mut failures = Vec::new();
    let instances: usize = suite.iter().map(|g| menger_instances(g, &mut failures)).sum();
    finish(
        9,
        start,
        &failures,
        &format!("{} graphs, {instances} instances, {} failures", suite.len(), failures.len()),
    );
}

#[test]
fn criterion_10_small_non_subcubic_immersion_free_graphs_of_width_three() {
    let start = Instant::now();
    let query = SearchQuery {
        max_n: 8,
        bw_at_least: 3,
        non_subcubic: true,
        immersion_free_only: true,
    };
    let found = search(query, Guard::Default).unwrap();
    let reparsed = SearchReport::parse(&found.to_text()).unwrap();
    let mut failures = Vec::new();
    if found.results.is_empty() {
        failures.push("empty result set".to_string());
    }
    if let Err((i, e)) = reparsed.reverify() {
        failures.push(format!("result {i}: {e}"));
    }
    for r in &reparsed.results {
        if !r.graph.is_simple() || r.max_degree < 4 || r.branchwidth != 3 || !r.immersion_free {
            failures.push(format!("result {:?} breaks the query", r.graph));
        }
    }
    let companion = search(SearchQuery { bw_at_least: 4, ..query }, Guard::Default).unwrap();
    let archive = std::env::temp_dir().join("immersion-kit-bw4-companion.txt");
    std::fs::write(&archive, companion.to_text()).unwrap();
    let per_order: Vec<String> = (1..=8)
        .map(|n| format!("n{n}:{}", found.results.iter().filter(|r| r.vertex_count() == n).count()))
        .collect();
    finish(
        10,
        start,
        &failures,
        &format!(
            "{} graphs [{}], bw>=4 companion: {} graphs (archived at {})",
            found.results.len(),
            per_order.join(" "),
            companion.results.len(),
            archive.display()
        ),
    );
}
