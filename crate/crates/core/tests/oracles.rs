mod common;

use common::{
    all_strings, bfs_distances, bfs_edit_distance, brute_lcs, is_subsequence_str, random_string,
    rng,
};
use namematch::baselines::{edit_distance, lcs};

const ABC: [char; 3] = ['a', 'b', 'c'];

#[test]
fn edit_distance_matches_bfs_exhaustively() {
    let strings = all_strings(&ABC, 5);
    for transpose in [false, true] {
        for a in &strings {
            let dist = bfs_distances(a, &ABC, 6, transpose);
            for b in &strings {
                let expected = dist[&b.chars().collect::<Vec<_>>()];
                assert_eq!(
                    edit_distance(a, b, transpose),
                    expected,
                    "{a:?} {b:?} transpose={transpose}"
                );
            }
        }
    }
}

#[test]
fn lcs_matches_enumeration_exhaustively() {
    let strings = all_strings(&ABC, 5);
    for a in &strings {
        for b in &strings {
            let r = lcs(a, b);
            assert_eq!(r.length, brute_lcs(a, b), "{a:?} {b:?}");
            assert_eq!(r.witness.chars().count(), r.length);
            assert!(is_subsequence_str(&r.witness, a) && is_subsequence_str(&r.witness, b));
        }
    }
}

#[test]
fn random_pairs_match_oracles() {
    let mut rng = rng(7);
    for _ in 0..1000 {
        let a = random_string(&mut rng, &ABC, 0, 6);
        let b = random_string(&mut rng, &ABC, 0, 6);
        assert_eq!(lcs(&a, &b).length, brute_lcs(&a, &b), "{a:?} {b:?}");
        for transpose in [false, true] {
            assert_eq!(
                edit_distance(&a, &b, transpose),
                bfs_edit_distance(&a, &b, transpose),
                "{a:?} {b:?}"
            );
        }
    }
}

#[test]
fn deletion_insertion_bound() {
    let strings = all_strings(&ABC, 4);
    for a in &strings {
        for b in &strings {
            let (la, lb) = (a.len(), b.len());
            assert!(la + lb - 2 * lcs(a, b).length >= edit_distance(a, b, false));
        }
    }
}

#[test]
fn edit_distance_is_a_metric() {
    let strings = all_strings(&ABC, 3);
    for a in &strings {
        assert_eq!(edit_distance(a, a, false), 0);
        for b in &strings {
            let ab = edit_distance(a, b, false);
            assert_eq!(ab, edit_distance(b, a, false));
            assert_eq!(edit_distance(a, b, true), edit_distance(b, a, true));
            if a != b {
                assert!(ab > 0);
            }
            for c in &strings {
                assert!(ab <= edit_distance(a, c, false) + edit_distance(c, b, false));
            }
        }
    }
}
