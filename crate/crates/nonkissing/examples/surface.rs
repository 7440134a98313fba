//! Topology of the surfaces of the built-in families.

use nonkissing::corpus::corpus;
use nonkissing::surface::{invariants, surface_from_quiver};

fn main() {
    println!("{:16} {:>2} {:>2} {:>3} {:>3} {:>6}", "quiver", "b", "p", "p*", "g", "euler");
    for (name, q) in corpus() {
        let s = surface_from_quiver(&q);
        match invariants(&s) {
            Ok(i) => println!("{name:16} {:>2} {:>2} {:>3} {:>3} {:>6}", i.b, i.p, i.p_dual, i.genus, i.euler),
            Err(e) => println!("{name:16} {e}"),
        }
    }
}
