//! Reading quivers back off a surface: D gives the quiver, D* its Koszul dual.

use nonkissing::cli::load_quiver;
use nonkissing::surface::{dual_dissection, maps_isomorphic, quiver_from_surface, strip, surface_from_quiver, swap_dissections, Which};

fn main() {
    let input = std::env::args().nth(1).unwrap_or_else(|| "builtin:doublecycle:3".into());
    let q = load_quiver(&input).expect("a locally gentle quiver");
    let s = surface_from_quiver(&q);
    let back = quiver_from_surface(&s, Which::D).unwrap();
    println!("D  gives the quiver back: {}", back == q);
    let dual = quiver_from_surface(&s, Which::DualD).unwrap();
    println!("D* gives the Koszul dual: {}", dual.is_isomorphic(&q.koszul_dual()));

    let swapped = swap_dissections(&s);
    println!("swapping twice is the identity: {}", maps_isomorphic(&swap_dissections(&swapped), &s, true));
    let rebuilt = dual_dissection(&strip(&s, Which::D)).unwrap();
    println!("D* rebuilt from D alone: {}", maps_isomorphic(&rebuilt, &s, false));
}
