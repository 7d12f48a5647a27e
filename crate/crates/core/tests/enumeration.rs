mod common;

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use subtree_density::enumeration::{
    canonical_form, enumerate_trees, enumerate_trees_with_cap, prufer_decode, random_labeled_tree,
    sample_series_reduced, TreeFilter,
};
use subtree_density::Tree;

#[test]
fn class_counts_follow_otter_up_to_the_cap() {
    let otter = common::otter_counts(18);
    for (n, &expected) in otter.iter().enumerate().skip(1) {
        assert_eq!(
            enumerate_trees(n, TreeFilter::All).unwrap().count() as u128,
            expected,
            "n = {n}"
        );
    }
}

#[test]
fn series_reduced_counts() {
    // homeomorphically irreducible trees, computed here by filtering the full enumeration
    let reduced: Vec<usize> = (1..=14)
        .map(|n| enumerate_trees(n, TreeFilter::SeriesReduced).unwrap().count())
        .collect();
    let filtered: Vec<usize> = (1..=14)
        .map(|n| {
            enumerate_trees(n, TreeFilter::All)
                .unwrap()
                .filter(|t| t.is_series_reduced())
                .count()
        })
        .collect();
    assert_eq!(reduced, filtered);
    assert_eq!(reduced, [0, 0, 0, 1, 1, 2, 2, 4, 5, 10, 14, 26, 42, 78]);
}

#[test]
fn classes_match_prufer_dedup() {
    for n in 1..=7 {
        let enumerated: BTreeSet<String> = enumerate_trees(n, TreeFilter::All)
            .unwrap()
            .map(|t| common::ahu_canonical_all_roots(t.n(), t.edges()))
            .collect();
        assert_eq!(
            enumerated,
            common::prufer_classes_with(n, common::ahu_canonical_all_roots),
            "n = {n}"
        );
    }
}

#[test]
fn random_labeled_trees_land_in_enumerated_classes() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 10..=12 {
        let classes: BTreeSet<String> = enumerate_trees(n, TreeFilter::All)
            .unwrap()
            .map(|t| canonical_form(&t).to_string())
            .collect();
        for _ in 0..2000 {
            let t = random_labeled_tree(n, &mut rng);
            assert!(classes.contains(&canonical_form(&t).to_string()));
        }
    }
}

#[test]
fn canonical_form_agrees_with_independent_encoding() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let trees: Vec<Tree> = (0..300).map(|i| random_labeled_tree(3 + i % 9, &mut rng)).collect();
    for a in &trees {
        for b in &trees {
            let same =
                common::ahu_canonical_all_roots(a.n(), a.edges()) == common::ahu_canonical_all_roots(b.n(), b.edges());
            assert_eq!(canonical_form(a) == canonical_form(b), same);
        }
    }
}

#[test]
fn library_prufer_decoding_matches_reference() {
    let seq = [3, 3, 3, 4];
    let ours = prufer_decode(&seq, 6).unwrap();
    let reference = Tree::from_edges(6, &common::prufer_edges(&seq, 6)).unwrap();
    assert_eq!(ours, reference);
}

#[test]
fn cap_is_enforced() {
    assert!(enumerate_trees(19, TreeFilter::All).is_err());
    assert!(enumerate_trees_with_cap(8, TreeFilter::All, 7).is_err());
    assert!(enumerate_trees(0, TreeFilter::All).is_err());
}

#[test]
fn samples_are_reproducible_and_series_reduced() {
    for target in [4, 10, 30, 75] {
        for seed in 0..20 {
            let t = sample_series_reduced(target, seed).unwrap();
            assert!(t.is_series_reduced());
            assert!(t.n() >= target);
            assert_eq!(t, sample_series_reduced(target, seed).unwrap());
        }
    }
}
