//! g-, c- and d-vectors on every facet of A2.

use nonkissing::blossom;
use nonkissing::complex::enumerate_facets;
use nonkissing::corpus::path_a;
use nonkissing::vectors::{check_dual_bases, facet_vectors};

fn main() {
    let b = blossom(&path_a(2));
    let g = enumerate_facets(&b, 100).unwrap();
    for (k, f) in g.facets.iter().enumerate() {
        let v = facet_vectors(&b, f).unwrap();
        println!("F{k}");
        for (i, w) in v.walks.iter().enumerate() {
            println!("  {:28} g {:?}  c {:?}  d {:?}", w.to_text(&b), v.g[i], v.c[i], v.d[i]);
        }
        println!("  dual bases: {:?}", check_dual_bases(&v.g, &v.c));
    }
}
