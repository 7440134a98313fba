//! Walks of a blossoming quiver and their kissing numbers.
//!
//!     cargo run --example walks -- builtin:reversed:3

use nonkissing::cli::load_quiver;
use nonkissing::enumerate::{enumerate_walks, DEFAULT_BODY_BOUND};
use nonkissing::kiss::{is_self_kissing, kiss_count};
use nonkissing::blossom;

fn main() {
    let input = std::env::args().nth(1).unwrap_or_else(|| "builtin:a:2".into());
    let b = blossom(&load_quiver(&input).expect("a locally gentle quiver"));
    let ws = enumerate_walks(&b, DEFAULT_BODY_BOUND);
    println!("{} walks (complete: {})", ws.walks.len(), ws.complete);
    for w in &ws.walks {
        let tag = if is_self_kissing(&b, w) { "  self-kissing" } else { "" };
        println!("  {:?} {}{tag}", w.kind(), w.to_text(&b));
    }
    if ws.walks.len() <= 12 {
        println!("kn(row, column):");
        for x in &ws.walks {
            let row: Vec<String> = ws.walks.iter().map(|y| format!("{:>3}", kiss_count(&b, x, y).to_string())).collect();
            println!("  {}", row.join(""));
        }
    }
}
