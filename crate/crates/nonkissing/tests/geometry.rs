use nonkissing::blossom;
use nonkissing::complex::enumerate_facets;
use nonkissing::corpus::{builtin, corpus, cycle, path_a};
use nonkissing::enumerate::enumerate_walks;
use nonkissing::geometry::{build_associahedron, build_fan};
use nonkissing::vectors::{check_dual_bases, d_vector, facet_vectors, is_sign_coherent, coordinates_sign_coherent};
use nonkissing::{peak_walk, GeometryError};

#[test]
fn dual_bases_and_sign_coherence() {
    for (name, q) in corpus() {
        let b = blossom(&q);
        let g = enumerate_facets(&b, 100).unwrap();
        for f in &g.facets {
            let v = facet_vectors(&b, f).unwrap();
            check_dual_bases(&v.g, &v.c).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(coordinates_sign_coherent(&v.g), "{name}");
            assert!(v.c.iter().all(|c| is_sign_coherent(c)), "{name}");
            assert!(v.d.iter().flatten().all(|d| is_sign_coherent(d)), "{name}");
        }
    }
}

#[test]
fn a2_vector_matrices() {
    let b = blossom(&path_a(2));
    let g = enumerate_facets(&b, 10).unwrap();
    let f = g
        .facets
        .iter()
        .find(|f| {
            let v = facet_vectors(&b, f).unwrap();
            v.g.contains(&vec![1, -1]) && v.g.contains(&vec![0, -1])
        })
        .unwrap();
    let v = facet_vectors(&b, f).unwrap();
    let pick = |gv: Vec<i64>| v.g.iter().position(|x| *x == gv).unwrap();
    let (i, j) = (pick(vec![1, -1]), pick(vec![0, -1]));
    assert_eq!((v.c[i].clone(), v.c[j].clone()), (vec![1, 0], vec![-1, -1]));
    assert_eq!((v.d[i].clone(), v.d[j].clone()), (Some(vec![1, 0]), Some(vec![0, -1])));
    assert!(check_dual_bases(&[vec![1, -1], vec![0, -1]], &[vec![1, 0], vec![-1, -1]]).is_ok());
    // the peak walk at 1 also kisses the deep walk at 2
    assert_eq!(d_vector(&b, &peak_walk(&b, 0)).unwrap(), vec![1, 1]);
}

#[test]
fn pentagon() {
    let b = blossom(&path_a(2));
    let g = enumerate_facets(&b, 10).unwrap();
    let fan = build_fan(&b, &g).unwrap();
    assert!(fan.is_complete_simplicial());
    assert_eq!(fan.rays.len(), 5);
    let p = build_associahedron(&b, &g, &enumerate_walks(&b, 20)).unwrap();
    assert!(p.report.ok(), "{:?}", p.report.violations);
    assert_eq!((p.vertices.len(), p.defining.len(), p.edges.len()), (5, 5, 5));
}

#[test]
fn a3_and_reversed_polytopes() {
    for spec in ["builtin:a:3", "builtin:cambrian:rl", "builtin:reversed:3"] {
        let b = blossom(&builtin(spec).unwrap());
        let g = enumerate_facets(&b, 2000).unwrap();
        assert!(build_fan(&b, &g).unwrap().is_complete_simplicial(), "{spec}");
        let p = build_associahedron(&b, &g, &enumerate_walks(&b, 20)).unwrap();
        assert!(p.report.ok(), "{spec}: {:?}", p.report.violations);
        assert_eq!(p.vertices.len(), g.facets.len());
    }
}

#[test]
fn loop_fan_but_no_polytope() {
    let b = blossom(&cycle(1));
    let g = enumerate_facets(&b, 100).unwrap();
    assert!(g.closed);
    assert!(build_fan(&b, &g).unwrap().is_complete_simplicial());
    assert!(matches!(build_associahedron(&b, &g, &enumerate_walks(&b, 20)), Err(GeometryError::Complex(_) | GeometryError::InfiniteKissing(_))));
}

#[test]
fn open_flip_graph_has_no_fan() {
    let b = blossom(&builtin("builtin:double:2").unwrap());
    let g = enumerate_facets(&b, 20).unwrap();
    assert!(matches!(build_fan(&b, &g), Err(GeometryError::NotClosed)));
}
