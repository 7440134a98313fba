//! Vertex and halfspace descriptions of the associahedron, compared exactly.

use nonkissing::blossom;
use nonkissing::cli::load_quiver;
use nonkissing::complex::enumerate_facets;
use nonkissing::enumerate::enumerate_walks;
use nonkissing::geometry::build_associahedron;
use nonkissing::linalg::rat_text;

fn main() {
    let input = std::env::args().nth(1).unwrap_or_else(|| "builtin:a:2".into());
    let b = blossom(&load_quiver(&input).expect("a locally gentle quiver"));
    let g = enumerate_facets(&b, 2000).unwrap();
    let universe = enumerate_walks(&b, 40);
    let p = match build_associahedron(&b, &g, &universe) {
        Ok(p) => p,
        Err(e) => {
            println!("refused: {e}");
            return;
        }
    };
    for v in &p.vertices {
        println!("  ({})", v.iter().map(rat_text).collect::<Vec<_>>().join(", "));
    }
    for &i in &p.defining {
        let h = &p.halfspaces[i];
        println!("  <{:?}, x> <= {}   {}", h.normal, h.offset, h.walk);
    }
    println!("{} vertices, {} facets, {} edges, ok: {}", p.vertices.len(), p.defining.len(), p.edges.len(), p.report.ok());
}
