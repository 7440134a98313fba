mod common;

use nonkissing::blossom::{blossom, BlossomQuiver};
use nonkissing::corpus::{builtin, corpus, double_path, path_a};
use nonkissing::quiver::quiver;
use nonkissing::{prune, BoundQuiver, QuiverError};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn json_round_trip() {
    for (_, q) in corpus() {
        assert_eq!(BoundQuiver::from_json(&q.to_json()).unwrap(), q);
    }
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/a2.json")).unwrap();
    assert_eq!(BoundQuiver::from_json(&text).unwrap(), path_a(2));
}

#[test]
fn rejects_bad_quivers() {
    let e = quiver(&["1"], &[("a", "1", "1"), ("b", "1", "1"), ("c", "1", "1")], &[]).unwrap_err();
    assert!(matches!(e, QuiverError::DegreeViolation { .. }));
    let e = quiver(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[("b", "a")]).unwrap_err();
    assert!(matches!(e, QuiverError::NonComposableRelation { .. }));
    // two relation-free successors
    let e = quiver(&["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "2", "4")], &[]).unwrap_err();
    assert!(matches!(e, QuiverError::GentleBranchViolation { .. }));
    assert!(matches!(quiver(&["1", "1"], &[], &[]), Err(QuiverError::DuplicateVertex(_))));
    assert!(matches!(quiver(&["1"], &[("a", "1", "9")], &[]), Err(QuiverError::UnknownVertex { .. })));
    assert!(matches!(quiver(&["a b"], &[], &[]), Err(QuiverError::BadId(_))));
    assert!(matches!(BoundQuiver::from_json(r#"{"vertices":[],"arrows":[],"extra":1}"#), Err(QuiverError::Parse(_))));
    assert!(builtin("builtin:nope:3").is_err());
}

#[test]
fn blossom_is_complete_and_prunes_back() {
    for (name, q) in corpus() {
        let b = blossom(&q);
        let full = b.quiver();
        for v in 0..full.n_vertices() {
            assert!(matches!(full.degree(v), 1 | 4), "{name}: degree {}", full.degree(v));
        }
        assert_eq!(prune(&b), q, "{name}");
        assert!(BlossomQuiver::from_complete(full.clone()).is_ok());
    }
}

#[test]
fn koszul_dual_complements_relations() {
    let q = double_path(3);
    let k = q.koszul_dual();
    assert_eq!(k.n_arrows(), q.n_arrows());
    let composable = (0..q.n_arrows())
        .flat_map(|a| (0..q.n_arrows()).map(move |b| (a, b)))
        .filter(|&(a, b)| q.tgt(a) == q.src(b))
        .count();
    assert_eq!(q.relations().len() + k.relations().len(), composable);
    assert_eq!(k.koszul_dual(), q);
}

#[test]
fn isomorphism_ignores_names() {
    let a = quiver(&["x", "y"], &[("p", "x", "y")], &[]).unwrap();
    let b = quiver(&["1", "2"], &[("q", "2", "1")], &[]).unwrap();
    assert!(a.is_isomorphic(&b));
    assert!(!a.is_isomorphic(&path_a(3)));
    assert!(!double_path(3).is_isomorphic(&nonkissing::corpus::reversed_path(3)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn blossom_sizes(seed in any::<u64>()) {
        let q = common::random_quiver(&mut ChaCha8Rng::seed_from_u64(seed), 8);
        let b = blossom(&q);
        let (n0, n1) = (q.n_vertices() as i64, q.n_arrows() as i64);
        prop_assert_eq!(b.quiver().n_vertices() as i64, 5 * n0 - 2 * n1);
        prop_assert_eq!(b.quiver().n_arrows() as i64, 4 * n0 - n1);
        prop_assert_eq!(prune(&b), q.clone());
    }

    #[test]
    fn koszul_involution_and_commutation(seed in any::<u64>()) {
        let q = common::random_quiver(&mut ChaCha8Rng::seed_from_u64(seed), 6);
        prop_assert_eq!(q.koszul_dual().koszul_dual(), q.clone());
        let via = BlossomQuiver::from_complete(blossom(&q).quiver().koszul_dual()).unwrap();
        prop_assert!(blossom(&q.koszul_dual()).quiver().is_isomorphic(via.quiver()));
    }
}
