mod common;

use immersion_kit::decomposer::{
    decompose, parse_certificate, recompose_all, verify_certificate, write_certificate, Certificate,
};
use immersion_kit::generate::random_connected_multigraph;
use immersion_kit::multigraph::families::{complete, cube, disjoint_union, twin_k4_bridged};
use immersion_kit::relations::is_kuratowski_immersion_free;
use immersion_kit::MultiGraph;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn connected_multigraph() -> impl Strategy<Value = MultiGraph> {
    (2usize..=10, 0usize..=24, any::<u64>()).prop_map(|(n, m, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_connected_multigraph(&mut rng, n, m.max(n - 1))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn decomposition_is_deterministic_and_verifies(g in connected_multigraph()) {
        let first = write_certificate(&decompose(&g).unwrap());
        let second = write_certificate(&decompose(&g.clone()).unwrap());
        prop_assert_eq!(&first, &second);
        let trees = parse_certificate(&first).unwrap();
        prop_assert_eq!(write_certificate(&trees), first);
        prop_assert_eq!(recompose_all(&trees).unwrap(), g.clone());
        let report = verify_certificate(&g, &trees);
        prop_assert!(report.passed(), "{}", report);
    }
}

#[test]
fn immersion_free_samples_split_into_immersion_free_certified_pieces() {
    let mut rng = common::rng(7);
    let (graphs, _) = common::immersion_free_samples(&mut rng, 60, 16);
    for g in &graphs {
        let trees = decompose(g).unwrap();
        for t in &trees {
            for (leaf, cert) in t.leaves() {
                assert!(cert.is_certified(), "{leaf:?}");
                assert!(is_kuratowski_immersion_free(leaf).unwrap().0, "{leaf:?}");
            }
        }
    }
}

#[test]
fn tampered_leaf_edges_are_caught() {
    let g = twin_k4_bridged();
    let text = write_certificate(&decompose(&g).unwrap());
    let edge_line = text.lines().find(|l| l.starts_with("edge ")).unwrap().to_string();
    let tampered = text.replacen(&format!("{edge_line}\n"), "", 1);
    let report = verify_certificate(&g, &parse_certificate(&tampered).unwrap());
    assert!(!report.passed());
    assert!(report.failures().any(|f| f.node != "c0"), "{report}");
    // A certificate for a different graph is rejected at the root.
    let other = write_certificate(&decompose(&cube()).unwrap());
    assert!(!verify_certificate(&g, &parse_certificate(&other).unwrap()).passed());
}

#[test]
fn overstated_widths_are_caught() {
    let g = complete(5);
    let mut trees = decompose(&g).unwrap();
    if let immersion_kit::decomposer::DecompositionTree::Leaf { certificate, .. } = &mut trees[0] {
        if let Certificate::BranchwidthAtMost { bound, .. } = certificate {
            *bound = 3;
        }
    }
    let report = verify_certificate(&g, &trees);
    assert!(!report.passed());
    assert!(report.failures().any(|f| f.check == "certificate"), "{report}");
}

#[test]
fn components_are_decomposed_separately() {
    let g = disjoint_union(&twin_k4_bridged(), &complete(4));
    let trees = decompose(&g).unwrap();
    assert_eq!(trees.len(), 2);
    assert_eq!(trees.iter().map(|t| t.split_count()).sum::<usize>(), 1);
    assert_eq!(recompose_all(&trees).unwrap(), g);
    assert!(verify_certificate(&g, &trees).passed());
}
