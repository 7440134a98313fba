//! The g-vector fan and its wall-crossing certificate.

use nonkissing::blossom;
use nonkissing::cli::load_quiver;
use nonkissing::complex::enumerate_facets;
use nonkissing::geometry::build_fan;

fn main() {
    let input = std::env::args().nth(1).unwrap_or_else(|| "builtin:cycle:1".into());
    let b = blossom(&load_quiver(&input).expect("a locally gentle quiver"));
    let g = enumerate_facets(&b, 2000).unwrap();
    match build_fan(&b, &g) {
        Ok(fan) => {
            println!("{} rays, {} cones, {} walls in dimension {}", fan.rays.len(), fan.cones.len(), fan.walls.len(), fan.dim);
            for r in &fan.rays {
                println!("  {r:?}");
            }
            println!("complete and simplicial: {}", fan.is_complete_simplicial());
            for v in &fan.report.violations {
                println!("  ! {v}");
            }
        }
        Err(e) => println!("no fan: {e}"),
    }
}
