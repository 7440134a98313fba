//! Load a quiver, validate it and print its blossoming quiver.
//!
//!     cargo run --example blossom -- examples/doublepath3.json

use nonkissing::{blossom, prune, BoundQuiver};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/a3.json").into());
    let text = std::fs::read_to_string(&path).expect("readable quiver file");
    let q = match BoundQuiver::from_json(&text) {
        Ok(q) => q,
        Err(e) => {
            eprintln!("{path}: {e}");
            std::process::exit(2);
        }
    };
    let b = blossom(&q);
    let full = b.quiver();
    println!("{} vertices, {} arrows, {} relations", q.n_vertices(), q.n_arrows(), q.relations().len());
    println!("blossom: {} vertices, {} arrows", full.n_vertices(), full.n_arrows());
    for a in 0..full.n_arrows() {
        let tag = if b.is_blossom_arrow(a) { " (blossom)" } else { "" };
        println!("  {}: {} -> {}{tag}", full.arrow_id(a), full.vertex_id(full.src(a)), full.vertex_id(full.tgt(a)));
    }
    assert_eq!(prune(&b), q);
}
