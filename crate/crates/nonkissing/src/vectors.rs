//! g-, c- and d-vectors of walks, indexed by the vertices of the base quiver.

use crate::blossom::BlossomQuiver;
use crate::complex::Report;
use crate::error::{ComplexError, GeometryError};
use crate::facet::{distinguished_string, Facet};
use crate::kiss::{kiss_count, KissCount};
use crate::walk::{deep_walk, Corner, Walk};

pub type IntVector = Vec<i64>;

fn unit(n: usize, a: usize, s: i64) -> IntVector {
    let mut v = vec![0; n];
    v[a] = s;
    v
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Peaks minus deeps. Tails are straight, so only finitely many corners count.
pub fn g_vector(bq: &BlossomQuiver, w: &Walk) -> IntVector {
    let mut g = vec![0; bq.base().n_vertices()];
    for (_, v, c) in w.corners(bq) {
        let a = bq.base_vertex(v).expect("corners sit at interior vertices");
        g[a] += if c == Corner::Peak { 1 } else { -1 };
    }
    g
}

/// Signed multiplicity vector of the distinguished string of `w` in `f`.
pub fn c_vector(bq: &BlossomQuiver, f: &Facet, w: &Walk) -> Result<IntVector, ComplexError> {
    let ds = distinguished_string(bq, f, w)?;
    let s = if ds.top { 1 } else { -1 };
    let mut c = vec![0; bq.base().n_vertices()];
    for k in ds.start + 1..=ds.end {
        if let Some(a) = bq.base_vertex(bq.tail(w.letter_at(k))) {
            c[a] += s;
        }
    }
    Ok(c)
}

pub fn d_vector(bq: &BlossomQuiver, w: &Walk) -> Result<IntVector, GeometryError> {
    let n = bq.base().n_vertices();
    let mut d = vec![0; n];
    for a in 0..n {
        let deep = deep_walk(bq, a);
        if *w == deep {
            return Ok(unit(n, a, -1));
        }
        match kiss_count(bq, w, &deep) {
            KissCount::Finite(k) => d[a] = k as i64,
            KissCount::Infinite => return Err(GeometryError::InfiniteKissing(w.to_text(bq))),
        }
    }
    Ok(d)
}

/// Vectors of the bending walks of a facet, in facet order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetVectors {
    pub walks: Vec<Walk>,
    pub g: Vec<IntVector>,
    pub c: Vec<IntVector>,
    /// `None` where a kissing number is infinite.
    pub d: Vec<Option<IntVector>>,
}

pub fn facet_vectors(bq: &BlossomQuiver, f: &Facet) -> Result<FacetVectors, ComplexError> {
    let walks: Vec<Walk> = f.bending().cloned().collect();
    let g = walks.iter().map(|w| g_vector(bq, w)).collect();
    let c = walks.iter().map(|w| c_vector(bq, f, w)).collect::<Result<_, _>>()?;
    let d = walks.iter().map(|w| d_vector(bq, w).ok()).collect();
    Ok(FacetVectors { walks, g, c, d })
}

/// `⟨g_i, c_j⟩ = δ_ij`, given the vectors as columns.
pub fn check_dual_bases(g: &[IntVector], c: &[IntVector]) -> Result<(), String> {
    if g.len() != c.len() {
        return Err(format!("{} g-vectors against {} c-vectors", g.len(), c.len()));
    }
    for (i, gi) in g.iter().enumerate() {
        for (j, cj) in c.iter().enumerate() {
            let want = i64::from(i == j);
            let got = dot(gi, cj);
            if got != want {
                return Err(format!("<g{}, c{}> = {got}, expected {want}", i + 1, j + 1));
            }
        }
    }
    Ok(())
}

pub fn is_sign_coherent(v: &[i64]) -> bool {
    !(v.iter().any(|&x| x > 0) && v.iter().any(|&x| x < 0))
}

/// Each coordinate has one sign across all the vectors.
pub fn coordinates_sign_coherent(vs: &[IntVector]) -> bool {
    let n = vs.first().map_or(0, |v| v.len());
    (0..n).all(|a| is_sign_coherent(&vs.iter().map(|v| v[a]).collect::<Vec<_>>()))
}

pub fn dual_basis_check(bq: &BlossomQuiver, facets: &[Facet]) -> Report {
    let mut rep = Report::default();
    for (k, f) in facets.iter().enumerate() {
        rep.checked += 1;
        match facet_vectors(bq, f) {
            Ok(fv) => {
                if let Err(e) = check_dual_bases(&fv.g, &fv.c) {
                    rep.fail(format!("facet {k}: {e}"));
                }
            }
            Err(e) => rep.fail(format!("facet {k}: {e}")),
        }
    }
    rep
}

/// g per coordinate across each facet; c and d per vector. Infinite d-vectors are skipped.
pub fn sign_coherence_check(bq: &BlossomQuiver, facets: &[Facet]) -> Report {
    let mut rep = Report::default();
    for (k, f) in facets.iter().enumerate() {
        rep.checked += 1;
        let fv = match facet_vectors(bq, f) {
            Ok(fv) => fv,
            Err(e) => {
                rep.fail(format!("facet {k}: {e}"));
                continue;
            }
        };
        if !coordinates_sign_coherent(&fv.g) {
            rep.fail(format!("facet {k}: g-vectors {:?}", fv.g));
        }
        for (w, c) in fv.walks.iter().zip(&fv.c) {
            if !is_sign_coherent(c) {
                rep.fail(format!("facet {k}: c({}) = {c:?}", w.to_text(bq)));
            }
        }
        for (w, d) in fv.walks.iter().zip(&fv.d) {
            if let Some(d) = d {
                if !is_sign_coherent(d) {
                    rep.fail(format!("facet {k}: d({}) = {d:?}", w.to_text(bq)));
                }
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blossom::blossom;
    use crate::complex::{enumerate_facets, peak_facet};
    use crate::quiver::quiver;
    use crate::walk::peak_walk;

    #[test]
    fn peak_and_deep_vectors() {
        let b = blossom(&quiver(&["1", "2"], &[("a", "1", "2")], &[]).unwrap());
        for a in 0..2 {
            assert_eq!(g_vector(&b, &peak_walk(&b, a)), unit(2, a, 1));
            assert_eq!(g_vector(&b, &deep_walk(&b, a)), unit(2, a, -1));
            assert_eq!(d_vector(&b, &deep_walk(&b, a)).unwrap(), unit(2, a, -1));
        }
        // 1_peak kisses 2_deep along a as well as 1_deep at the vertex.
        let p1 = peak_walk(&b, b.base().vertex_index("1").unwrap());
        assert_eq!(d_vector(&b, &p1).unwrap(), vec![1, 1]);
        let fv = facet_vectors(&b, &peak_facet(&b)).unwrap();
        assert_eq!(fv.c, fv.g);
        assert!(fv.g.iter().all(|v| v.iter().sum::<i64>() == 1));
    }

    #[test]
    fn pentagon_dual_bases() {
        let b = blossom(&quiver(&["1", "2"], &[("a", "1", "2")], &[]).unwrap());
        let g = enumerate_facets(&b, 10).unwrap();
        assert!(dual_basis_check(&b, &g.facets).ok());
        assert!(sign_coherence_check(&b, &g.facets).ok());
    }

    #[test]
    fn matrix_fixture() {
        let g = vec![vec![1, -1], vec![0, -1]];
        let c = vec![vec![1, 0], vec![-1, -1]];
        let d = vec![vec![1, 0], vec![0, -1]];
        assert!(check_dual_bases(&g, &c).is_ok());
        assert!(coordinates_sign_coherent(&g));
        assert!(c.iter().chain(&d).all(|v| is_sign_coherent(v)));
        assert!(check_dual_bases(&g, &d).is_err());
    }
}
