mod common;

use nonkissing::blossom;
use nonkissing::complex::{census, enumerate_facets, peak_facet, verify_distinguished, verify_purity, verify_thinness};
use nonkissing::corpus::{builtin, corpus};
use nonkissing::enumerate::enumerate_walks;
use nonkissing::facet::{distinguished_arrows, flip};
use nonkissing::WalkKind;

fn oracle(spec: &str) -> (usize, bool) {
    let b = blossom(&builtin(spec).unwrap());
    let g = enumerate_facets(&b, 2000).unwrap();
    let mut ours = g.facets.clone();
    ours.sort();
    (ours.len(), g.closed && ours == common::clique_facets(&b, &enumerate_walks(&b, 10).walks))
}

#[test]
fn flips_find_every_clique() {
    assert_eq!(oracle("builtin:a:2"), (5, true));
    assert_eq!(oracle("builtin:a:3"), (14, true));
    assert_eq!(oracle("builtin:cambrian:rl"), (14, true));
    assert!(oracle("builtin:cycle:1").1);
    assert!(oracle("builtin:reversed:2").1);
    assert!(oracle("builtin:reversed:3").1);
}

#[test]
fn facet_census() {
    for (name, q) in corpus() {
        let b = blossom(&q);
        let g = enumerate_facets(&b, 150).unwrap();
        let (n0, n1) = (q.n_vertices(), q.n_arrows());
        let p = b.count_straight_cycles();
        for f in &g.facets {
            let (bend, fin, inf) = census(f);
            assert_eq!((bend, fin, inf), (n0, 2 * n0 - n1, p), "{name}");
            for w in f.walks() {
                let want = match w.kind() {
                    WalkKind::Bending => 2,
                    WalkKind::FiniteStraight => 1,
                    WalkKind::InfiniteStraight => 0,
                };
                assert_eq!(distinguished_arrows(&b, f, w).unwrap().len(), want, "{name}");
            }
        }
        assert!(verify_purity(&b, &g.facets).ok());
        assert!(verify_distinguished(&b, &g.facets).ok());
    }
}

#[test]
fn flips_are_involutions() {
    for spec in ["builtin:a:3", "builtin:reversed:3", "builtin:cycle:2", "builtin:cambrian:rlr"] {
        let b = blossom(&builtin(spec).unwrap());
        let g = enumerate_facets(&b, 2000).unwrap();
        assert!(g.closed);
        assert!(verify_thinness(&b, &g).ok(), "{spec}");
        for f in &g.facets {
            for w in f.bending() {
                let fl = flip(&b, f, w).unwrap();
                assert_ne!(fl.facet, *f);
                assert_eq!(fl.facet.len(), f.len());
                let back = flip(&b, &fl.facet, &fl.new).unwrap();
                assert_eq!(back.facet, *f);
                assert_eq!(back.new, *w);
            }
        }
    }
}

#[test]
fn infinite_complexes_stop_at_the_bound() {
    let b = blossom(&builtin("builtin:double:2").unwrap());
    let g = enumerate_facets(&b, 50).unwrap();
    assert!(!g.closed);
    assert!(g.facets.len() >= 50);
    assert_eq!(g.facets[0], peak_facet(&b));
}
