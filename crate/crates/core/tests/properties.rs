use proptest::prelude::*;

use cppt::canon::{self, Form};
use cppt::fixtures;
use cppt::induced;
use cppt::io;
use cppt::lab::Mode;
use cppt::{Cppt, Vertex};

/// Random flip walk of the canonical graph, steered by `choices`, then an
/// interior relabeling by `perm_seed`.
fn walk(n: usize, choices: &[(usize, usize)], perm_seed: usize) -> Cppt {
    let mut t = fixtures::canonical(n);
    for &(i, j) in choices {
        let es = t.flippable_edges();
        let e = es[i % es.len()];
        let c = t.flip_candidates(e).unwrap();
        t = t.apply_flip(&c[j % c.len()]).unwrap();
    }
    let mut inner: Vec<Vertex> = (3..n).collect();
    let k = inner.len();
    for i in 0..k {
        let j = (perm_seed / (i + 1)) % k;
        inner.swap(i, j);
    }
    let full: Vec<Vertex> = (0..3).chain(inner).collect();
    t.relabel(&full)
}

fn graph() -> impl Strategy<Value = Cppt> {
    (4usize..=11, prop::collection::vec((0usize..64, 0usize..3), 0..80), 0usize..10_000)
        .prop_map(|(n, ch, p)| walk(n, &ch, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn flips_preserve_axioms(t in graph()) {
        let r = t.validate();
        prop_assert!(r.valid, "{:?}", r.violations);
        prop_assert_eq!(r.e, 2 * r.n - 3);
        prop_assert_eq!(r.t, 1);
        for (m, next) in t.neighbors_by_flip() {
            prop_assert!(next.is_valid());
            let back = m.reverse(&next).unwrap();
            prop_assert_eq!(next.apply_flip(&back).unwrap(), t.clone());
        }
    }

    #[test]
    fn relabeling_commutes_with_flips(t in graph(), p in 0usize..1000) {
        let n = t.n();
        let mut inner: Vec<Vertex> = (3..n).collect();
        let k = p % inner.len().max(1);
        inner.rotate_left(k);
        let perm: Vec<Vertex> = (0..3).chain(inner).collect();
        let u = t.relabel(&perm);
        prop_assert_eq!(t.flippable_edges().len(), u.flippable_edges().len());
        prop_assert_eq!(Mode::Unlabeled.key(&t), Mode::Unlabeled.key(&u));
    }

    #[test]
    fn documents_round_trip(t in graph()) {
        let s = io::write_graph(&t);
        let back = io::read_graph(&s).unwrap();
        prop_assert_eq!(io::graph_hash(&back), io::graph_hash(&t));
        prop_assert_eq!(back, t);
    }

    #[test]
    fn canonicalization_reaches_canonical(t in graph()) {
        let seq = canon::canonicalize_triangular(&t).unwrap();
        let end = seq.verify().unwrap();
        prop_assert_eq!(canon::classify(&end).form, Form::Canonical);
        let n = t.n();
        prop_assert!(seq.len() <= 5 * n * n);
    }

    #[test]
    fn sequences_hit_labeled_targets(a in graph(), ch in prop::collection::vec((0usize..64, 0usize..3), 0..40), p in 0usize..10_000) {
        let b = walk(a.n(), &ch, p);
        let seq = canon::flip_sequence(&a, &b, Mode::Labeled).unwrap();
        prop_assert_eq!(seq.verify().unwrap(), b.clone());
        let rev = seq.reversed().unwrap();
        prop_assert_eq!(rev.end().unwrap(), a);
    }

    #[test]
    fn emulation_is_exact(t in graph()) {
        let g = induced::induced_triangulation(&t).unwrap();
        prop_assert_eq!(g.edge_count(), 3 * t.n() - 6);
        for (m, next) in t.neighbors_by_flip() {
            let em = induced::emulate_flip(&t, &m).unwrap();
            prop_assert!(em.flips.len() <= 2);
            prop_assert_eq!(em.replay().unwrap(), induced::induced_triangulation(&next).unwrap());
        }
    }
}
