//! Maximal non-kissing facets by flipping, checked against the clique oracle.

use nonkissing::blossom;
use nonkissing::cli::load_quiver;
use nonkissing::complex::{brute_force_facets, enumerate_facets, verify_purity, verify_thinness};

fn main() {
    let input = std::env::args().nth(1).unwrap_or_else(|| "builtin:a:3".into());
    let b = blossom(&load_quiver(&input).expect("a locally gentle quiver"));
    let g = enumerate_facets(&b, 2000).expect("flip graph");
    println!("{} facets, {} flips, closed: {}", g.facets.len(), g.edges.len(), g.closed);
    for (k, f) in g.facets.iter().enumerate().take(6) {
        println!("  F{k}: {}", f.bending().map(|w| w.to_text(&b)).collect::<Vec<_>>().join("  ,  "));
    }
    if let Ok(oracle) = brute_force_facets(&b, 12) {
        let mut a = g.facets.clone();
        a.sort();
        println!("clique oracle agrees: {}", a == oracle);
    }
    println!("purity ok: {}", verify_purity(&b, &g.facets).ok());
    println!("thinness ok: {}", verify_thinness(&b, &g).ok());
}
