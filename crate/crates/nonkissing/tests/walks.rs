mod common;

use nonkissing::blossom;
use nonkissing::corpus::{builtin, corpus, cycle, path_a};
use nonkissing::enumerate::{enumerate_nonkissing_walks, enumerate_walks, walk_set_is_finite};
use nonkissing::kiss::{kiss_count, kiss_count_unrolled, KissCount};
use nonkissing::{deep_walk, peak_walk, Walk, WalkError, WalkKind};

#[test]
fn a2_has_eight_walks() {
    let b = blossom(&path_a(2));
    let ws = enumerate_walks(&b, 40);
    assert!(ws.complete);
    assert_eq!(ws.walks.len(), 8);
    assert_eq!(ws.walks.iter().filter(|w| w.kind() == WalkKind::Bending).count(), 5);
    assert!(walk_set_is_finite(&b));
}

#[test]
fn loop_walks_are_infinite_but_few_avoid_themselves() {
    let b = blossom(&cycle(1));
    assert!(!walk_set_is_finite(&b));
    let small = enumerate_walks(&b, 3);
    assert!(!small.complete);
    assert!(enumerate_walks(&b, 8).walks.len() > small.walks.len());
    let nk = enumerate_nonkissing_walks(&b, 8);
    assert!(nk.complete);
    assert!(nk.walks.iter().any(|w| w.kind() == WalkKind::InfiniteStraight));
    for w in &nk.walks {
        assert_eq!(common::oracle_kn(&b, w, w), Some(0), "{}", w.to_text(&b));
    }
}

#[test]
fn text_round_trip() {
    for (name, q) in corpus().into_iter().take(20) {
        let b = blossom(&q);
        for w in enumerate_walks(&b, 6).walks {
            let t = w.to_text(&b);
            assert_eq!(Walk::parse(&b, &t).unwrap(), w, "{name}: {t}");
            assert_eq!(Walk::canonicalize(&b, &w.reversed()).unwrap(), w);
        }
    }
}

#[test]
fn parse_errors() {
    let b = blossom(&path_a(2));
    assert!(matches!(Walk::parse(&b, "zz+"), Err(WalkError::UnknownArrow(_))));
    assert!(matches!(Walk::parse(&b, "a1+"), Err(WalkError::NotMaximal(_))));
    assert!(matches!(Walk::parse(&b, "a1+ a1-"), Err(WalkError::NotReduced(..)) | Err(WalkError::NotComposable(..))));
    assert!(Walk::parse(&b, "").is_err());
}

#[test]
fn peaks_and_deeps() {
    for (name, q) in corpus() {
        let b = blossom(&q);
        for a in 0..q.n_vertices() {
            let (p, d) = (peak_walk(&b, a), deep_walk(&b, a));
            assert_eq!(p.kind(), WalkKind::Bending, "{name}");
            assert_ne!(p, d);
            let g = nonkissing::vectors::g_vector(&b, &p);
            assert!(g.iter().enumerate().all(|(k, &x)| x == i64::from(k == a)), "{name} {g:?}");
        }
    }
}

#[test]
fn kiss_counts_match_the_oracle() {
    for spec in ["builtin:a:3", "builtin:cambrian:rl", "builtin:reversed:3", "builtin:double:2", "builtin:cycle:1", "builtin:cycle:2", "builtin:doublecycle:1"] {
        let b = blossom(&builtin(spec).unwrap());
        let ws = enumerate_walks(&b, 4).walks;
        for x in &ws {
            for y in &ws {
                let want = common::oracle_kn(&b, x, y).map_or(KissCount::Infinite, KissCount::Finite);
                assert_eq!(kiss_count(&b, x, y), want, "{spec}: {} on {}", x.to_text(&b), y.to_text(&b));
            }
        }
    }
}

#[test]
fn loop_spirals_kiss_infinitely() {
    let b = blossom(&cycle(1));
    let (p, d) = (peak_walk(&b, 0), deep_walk(&b, 0));
    assert_eq!(kiss_count(&b, &p, &d), KissCount::Infinite);
    assert_eq!(common::oracle_kn(&b, &p, &d), None);
}

#[test]
fn unroll_does_not_change_counts() {
    for spec in ["builtin:cycle:2", "builtin:cycle:3", "builtin:doublecycle:2", "builtin:double:3"] {
        let b = blossom(&builtin(spec).unwrap());
        let ws = enumerate_walks(&b, 4).walks;
        for x in &ws {
            for y in &ws {
                assert_eq!(kiss_count_unrolled(&b, x, y, 2), kiss_count_unrolled(&b, x, y, 4));
            }
        }
    }
}
