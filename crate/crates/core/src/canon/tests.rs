use itertools::Itertools;

use super::*;
use crate::embedding::Dart;
use crate::fixtures;
use crate::lab::{generate, unlabeled_key, Mode};

fn ends_valid(seq: &FlipSequence) -> Cppt {
    seq.verify().expect("every prefix valid")
}

fn all_triangular(max_n: usize) -> Vec<Cppt> {
    (3..=max_n).flat_map(|n| generate::labeled(n, 3)).collect()
}

#[test]
fn triangular_reaches_canonical() {
    for t in all_triangular(7) {
        let seq = canonicalize_triangular(&t).unwrap();
        let end = ends_valid(&seq);
        let p = classify(&end);
        assert_eq!(p.form, Form::Canonical, "{t:?}");
        assert_eq!(p.roles, Some(Roles::of(&t).unwrap()));
        let i = t.n() - 3;
        assert!(seq.len() <= 3 * i * i.max(1), "{} flips for i = {i}", seq.len());
    }
}

#[test]
fn canonical_is_fixed_point() {
    for n in 3..9 {
        let t = fixtures::canonical(n);
        assert!(canonicalize_triangular(&t).unwrap().is_empty());
        assert!(canonicalize_general(&fixtures::general_canonical(n + 1, 4)).unwrap().is_empty());
    }
}

#[test]
fn spinal_round_trip() {
    for i in 1..7 {
        let order: Vec<Vertex> = (3..3 + i).rev().collect();
        let t = fixtures::canonical_ordered(&order);
        for side in [Side::R, Side::S] {
            let up = canonical_to_spinal(&t, side).unwrap();
            assert_eq!(up.len(), i);
            let s = ends_valid(&up);
            assert_eq!(s, fixtures::mixed(&order, i, side));
            let down = spinal_to_canonical(&s).unwrap();
            assert_eq!(ends_valid(&down), t);
        }
    }
}

#[test]
fn sorting_every_permutation() {
    for i in 1..6 {
        let id: Vec<Vertex> = (3..3 + i).collect();
        let t = fixtures::canonical_ordered(&id);
        for perm in id.iter().copied().permutations(i) {
            let seq = sort_labels(&t, &perm).unwrap();
            assert_eq!(ends_valid(&seq), fixtures::canonical_ordered(&perm));
        }
    }
}

#[test]
fn swap_costs_four_at_bottom() {
    let t = fixtures::mixed(&[3, 4, 5], 2, Side::R);
    let seq = swap_neighbors(&t, 1).unwrap();
    assert_eq!(seq.len(), 4);
    assert_eq!(ends_valid(&seq), fixtures::mixed(&[4, 3, 5], 2, Side::R));
}

#[test]
fn rotation_to_every_base() {
    for i in 0..8 {
        let order: Vec<Vertex> = (3..3 + i).collect();
        let t = fixtures::canonical_ordered(&order);
        for base in [Edge::new(1, 2), Edge::new(2, 0), Edge::new(0, 1)] {
            let seq = rotate_canonical(&t, base).unwrap();
            assert!(seq.len() <= 3 * i, "{} flips for i = {i}", seq.len());
            let roles = [Roles { r: 0, s: 1, t: 2 }, Roles { r: 1, s: 2, t: 0 }, Roles { r: 2, s: 0, t: 1 }]
                .into_iter()
                .find(|r| r.base() == base)
                .unwrap();
            assert!(labeled::recognize_mixed(&ends_valid(&seq), roles, 0, Side::S).is_some(), "i = {i}");
        }
    }
    assert!(rotate_canonical(&fixtures::spinal(6, Side::S), Edge::new(1, 2)).is_err());
}

#[test]
fn merge_two_cells() {
    for (a, b) in [(0, 1), (1, 1), (2, 3), (0, 3), (3, 0)] {
        let av: Vec<Vertex> = (5..5 + a).collect();
        let bv: Vec<Vertex> = (5 + a..5 + a + b).collect();
        // C_2 = 0 1 2 with base 2-0, C_3 = 0 2 3 with base 0-2
        let t = fixtures::fan_cells(5, &[(av.clone(), 2), (bv.clone(), 0), (vec![], 0)]);
        let seq = merge_cells(&t, 2).unwrap();
        assert_eq!(seq.len(), if b == 0 { 0 } else { 2 * b + 2 });
        let merged: Vec<Vertex> = bv.iter().rev().chain(&av).copied().collect();
        let expect = fixtures::fan_cells(5, &[(merged, 2), (vec![], 0), (vec![], 0)]);
        assert_eq!(ends_valid(&seq), expect);
    }
}

#[test]
fn ear_and_fan() {
    for h in 4..7 {
        for n in h..=7.min(h + 3) {
            for t in generate::outer_fixed(n, h) {
                let seq = fan_outer_face(&t).unwrap();
                let end = ends_valid(&seq);
                assert!((2..h - 1).all(|j| end.has_edge(0, j)));
                if !t.has_edge(0, h - 2) {
                    let ear = ends_valid(&cut_ear(&t).unwrap());
                    assert!(ear.has_edge(0, h - 2));
                }
            }
        }
    }
}

#[test]
fn general_reaches_canonical() {
    for h in 4..7 {
        for n in h..=8.min(h + 3) {
            for t in generate::outer_fixed(n, h) {
                let end = ends_valid(&canonicalize_general(&t).unwrap());
                assert_eq!(classify(&end).form, Form::GeneralCanonical, "{t:?}");
            }
        }
    }
}

#[test]
fn cells_are_canonical() {
    for t in generate::outer_fixed(7, 4) {
        let Ok(seq) = canonicalize_cells(&t) else {
            assert!(!t.has_edge(0, 2));
            continue;
        };
        let end = ends_valid(&seq);
        let last = Roles { r: 0, s: 2, t: 3 };
        assert!(general::cell_order(&end, last).is_some());
        assert!(general::cell_order(&end, Roles { r: 2, s: 0, t: 1 }).is_some());
    }
}

#[test]
fn labeled_sequences_hit_target() {
    for (n, h) in [(5, 3), (6, 3), (5, 4), (6, 4), (6, 5)] {
        let all = generate::labeled(n, h);
        for (a, b) in all.iter().zip(all.iter().rev()).take(40) {
            let seq = flip_sequence(a, b, Mode::Labeled).unwrap();
            assert_eq!(&ends_valid(&seq), b);
        }
    }
}

#[test]
fn unlabeled_sequences_hit_class() {
    let all = generate::outer_fixed(7, 4);
    for (a, b) in all.iter().zip(all.iter().skip(3)).take(60) {
        let seq = flip_sequence(a, b, Mode::Unlabeled).unwrap();
        assert_eq!(unlabeled_key(&ends_valid(&seq)), unlabeled_key(b));
    }
    let t3 = fixtures::canonical(5);
    assert!(matches!(
        flip_sequence(&t3, &fixtures::general_canonical(5, 4), Mode::Labeled),
        Err(CanonError::OuterMismatch)
    ));
}

#[test]
fn reversal_round_trip() {
    for t in generate::labeled(6, 3) {
        let seq = canonicalize_triangular(&t).unwrap();
        let back = seq.reversed().unwrap();
        assert_eq!(back.end().unwrap(), t);
        assert_eq!(back.start, seq.end().unwrap());
    }
}

#[test]
fn triangle_walk_is_linear() {
    for t in generate::labeled(6, 3).into_iter().chain(generate::outer_fixed(7, 4)) {
        let inner_faces = t.trace_faces().len() - 1;
        for b in t.embedding().outer_face().darts.iter().map(|d| d.edge()) {
            let seq = move_triangle_to_edge(&t, b).unwrap();
            assert!(seq.len() < inner_faces);
            let end = ends_valid(&seq);
            let d = [Dart::new(b.0, b.1), Dart::new(b.1, b.0)].into_iter().find(|&d| !end.face_of(d).outer).unwrap();
            assert_eq!(end.face_of(d).len(), 3);
        }
    }
}
