//! Walks as curves on the surface, and crossings as kisses.

use nonkissing::blossom;
use nonkissing::corpus::reversed_path;
use nonkissing::enumerate::enumerate_walks;
use nonkissing::kiss::mutual_kiss;
use nonkissing::surface::{crossing_count, curve_of_walk, surface_from_blossom, walk_of_curve};

fn main() {
    let b = blossom(&reversed_path(3));
    let s = surface_from_blossom(&b);
    let walks: Vec<_> = enumerate_walks(&b, 20).walks.into_iter().filter(|w| w.is_bending()).collect();
    let curves: Vec<_> = walks.iter().map(|w| curve_of_walk(&s, &b, w).unwrap()).collect();
    for (w, c) in walks.iter().zip(&curves) {
        let (_, back) = walk_of_curve(&s, c).unwrap();
        println!("{:32} crosses {:?}{}", w.to_text(&b), c.crossings, if back == *w { "" } else { "  (round trip broken)" });
    }
    let mut agree = 0;
    for (i, x) in walks.iter().enumerate() {
        for (j, y) in walks.iter().enumerate() {
            agree += usize::from(crossing_count(&s, &curves[i], &curves[j]).unwrap() == mutual_kiss(&b, x, y));
        }
    }
    println!("{agree} of {} pairs: crossings = kisses", walks.len() * walks.len());
}
