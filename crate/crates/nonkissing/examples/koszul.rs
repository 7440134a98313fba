//! Koszul duals commute with blossoming.

use nonkissing::blossom::{blossom, BlossomQuiver};
use nonkissing::corpus::corpus;

fn main() {
    for (name, q) in corpus() {
        let k = q.koszul_dual();
        let twice = k.koszul_dual() == q;
        let via_blossom = BlossomQuiver::from_complete(blossom(&q).quiver().koszul_dual()).unwrap();
        let commutes = blossom(&k).quiver().is_isomorphic(via_blossom.quiver());
        println!("{name:16} relations {:2} -> {:2}  involution {twice}  commutes {commutes}", q.relations().len(), k.relations().len());
    }
}
