//! The g-vector fan and the associahedron, in exact arithmetic.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};

use crate::blossom::BlossomQuiver;
use crate::complex::{FlipGraph, Report};
use crate::enumerate::WalkSet;
use crate::error::{ComplexError, GeometryError};
use crate::kiss::{mutual_kiss, total_kissing_number, KissCount};
use crate::linalg::{coordinates, det, dot_big, dot_rat, normal, rank, rat, sign, Rat};
use crate::vectors::{c_vector, g_vector, IntVector};
use crate::walk::Walk;

#[derive(Debug, Clone)]
pub struct Wall {
    /// Ray indices spanning the wall.
    pub rays: Vec<usize>,
    pub cones: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Fan {
    pub dim: usize,
    pub rays: Vec<IntVector>,
    /// One cone per facet of the flip graph, as sorted ray indices.
    pub cones: Vec<Vec<usize>>,
    pub walls: Vec<Wall>,
    pub report: Report,
}

impl Fan {
    pub fn is_complete_simplicial(&self) -> bool {
        self.report.ok()
    }
}

fn generic_points(dim: usize) -> impl Iterator<Item = Vec<Rat>> {
    (0..64i64).map(move |t| {
        (0..dim)
            .map(|i| {
                let base = rat(2 * t + 3).pow(i as i32);
                if (i + t as usize) % 2 == 0 {
                    base
                } else {
                    -base
                }
            })
            .collect()
    })
}

pub fn build_fan(bq: &BlossomQuiver, g: &FlipGraph) -> Result<Fan, GeometryError> {
    if !g.closed {
        return Err(GeometryError::NotClosed);
    }
    let dim = bq.base().n_vertices();
    let mut ray_index: BTreeMap<IntVector, usize> = BTreeMap::new();
    let mut cones = vec![];
    let mut report = Report::default();
    for f in &g.facets {
        let mut cone: Vec<usize> = f
            .bending()
            .map(|w| {
                let v = g_vector(bq, w);
                let n = ray_index.len();
                *ray_index.entry(v).or_insert(n)
            })
            .collect();
        cone.sort();
        cones.push(cone);
    }
    let mut rays = vec![vec![]; ray_index.len()];
    for (v, i) in ray_index {
        rays[i] = v;
    }
    // Renumber rays in sorted order for stable output.
    let mut order: Vec<usize> = (0..rays.len()).collect();
    order.sort_by(|&a, &b| rays[a].cmp(&rays[b]));
    let mut rank_of = vec![0; rays.len()];
    for (r, &i) in order.iter().enumerate() {
        rank_of[i] = r;
    }
    let rays: Vec<IntVector> = order.iter().map(|&i| rays[i].clone()).collect();
    for c in &mut cones {
        for i in c.iter_mut() {
            *i = rank_of[*i];
        }
        c.sort();
    }

    for (k, c) in cones.iter().enumerate() {
        report.checked += 1;
        let gens: Vec<IntVector> = c.iter().map(|&i| rays[i].clone()).collect();
        if c.len() != dim || det(&gens).is_zero() {
            report.fail(format!("cone {k} is not simplicial"));
        }
    }

    let mut wall_map: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (k, c) in cones.iter().enumerate() {
        for skip in 0..c.len() {
            let w: Vec<usize> = c.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &r)| r).collect();
            wall_map.entry(w).or_default().push(k);
        }
    }
    let walls: Vec<Wall> = wall_map.into_iter().map(|(rays, cones)| Wall { rays, cones }).collect();
    for w in &walls {
        report.checked += 1;
        if w.cones.len() != 2 {
            report.fail(format!("wall {:?} lies in {} cones", w.rays, w.cones.len()));
            continue;
        }
        let gens: Vec<IntVector> = w.rays.iter().map(|&i| rays[i].clone()).collect();
        let nrm = normal(&gens, dim);
        let side = |cone: usize| {
            let out: Vec<usize> = cones[cone].iter().copied().filter(|r| !w.rays.contains(r)).collect();
            sign(&dot_big(&nrm, &rays[out[0]]))
        };
        let (s0, s1) = (side(w.cones[0]), side(w.cones[1]));
        if s0 == 0 || s0 != -s1 {
            report.fail(format!("cones {} and {} do not lie on opposite sides of wall {:?}", w.cones[0], w.cones[1], w.rays));
        }
    }

    let flip_pairs: BTreeSet<(usize, usize)> = g.edges.iter().map(|e| (e.from.min(e.to), e.from.max(e.to))).collect();
    let wall_pairs: BTreeSet<(usize, usize)> =
        walls.iter().filter(|w| w.cones.len() == 2).map(|w| (w.cones[0], w.cones[1])).collect();
    report.checked += 1;
    if flip_pairs != wall_pairs {
        report.fail("walls do not match the flips".to_string());
    }

    // A generic point lies in the interior of exactly one cone.
    let bases: Vec<Vec<IntVector>> = cones.iter().map(|c| c.iter().map(|&i| rays[i].clone()).collect()).collect();
    report.checked += 1;
    let mut decided = false;
    for p in generic_points(dim) {
        let coords: Vec<Option<Vec<Rat>>> = bases.iter().map(|b| coordinates(b, &p)).collect();
        let on_boundary = coords.iter().flatten().any(|x| x.iter().any(|t| t.is_zero()));
        if on_boundary {
            continue;
        }
        let hits = coords.iter().flatten().filter(|x| x.iter().all(|t| t.is_positive())).count();
        if hits != 1 {
            report.fail(format!("a generic point lies in {hits} cones"));
        }
        decided = true;
        break;
    }
    if !decided {
        report.fail("no generic point found".to_string());
    }
    Ok(Fan { dim, rays, cones, walls, report })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Halfspace {
    pub walk: String,
    pub normal: IntVector,
    pub offset: i64,
}

#[derive(Debug, Clone)]
pub struct Polytope {
    pub dim: usize,
    /// `p(F)` for each facet of the flip graph.
    pub vertices: Vec<Vec<Rat>>,
    /// `⟨g(w), x⟩ ≤ KN(w)` for every walk of the universe.
    pub halfspaces: Vec<Halfspace>,
    /// Distinct facet-defining halfspaces, as indices into `halfspaces`.
    pub defining: Vec<usize>,
    /// Vertex pairs joined by an edge of the H-polytope.
    pub edges: Vec<(usize, usize)>,
    pub report: Report,
}

fn kn(bq: &BlossomQuiver, w: &Walk, universe: &[Walk]) -> Result<i64, GeometryError> {
    match total_kissing_number(bq, w, universe) {
        KissCount::Finite(k) => Ok(k as i64),
        KissCount::Infinite => Err(GeometryError::InfiniteKissing(w.to_text(bq))),
    }
}

fn subsets(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(n, k, i + 1, cur, f);
            cur.pop();
        }
    }
    go(n, k, 0, &mut vec![], f)
}

/// Builds both descriptions and compares them. `universe` must hold every walk.
pub fn build_associahedron(bq: &BlossomQuiver, g: &FlipGraph, universe: &WalkSet) -> Result<Polytope, GeometryError> {
    if !g.closed {
        return Err(GeometryError::NotClosed);
    }
    if !universe.complete || !crate::enumerate::walk_set_is_finite(bq) {
        return Err(ComplexError::IncompleteUniverse.into());
    }
    let dim = bq.base().n_vertices();
    let walks = &universe.walks;
    let kns: Vec<i64> = walks.iter().map(|w| kn(bq, w, walks)).collect::<Result<_, _>>()?;
    let gs: Vec<IntVector> = walks.iter().map(|w| g_vector(bq, w)).collect();
    let halfspaces: Vec<Halfspace> = walks
        .iter()
        .zip(&gs)
        .zip(&kns)
        .map(|((w, g), &k)| Halfspace { walk: w.to_text(bq), normal: g.clone(), offset: k })
        .collect();
    let kn_of: BTreeMap<&Walk, i64> = walks.iter().zip(kns.iter().copied()).collect();

    let mut report = Report::default();
    let mut vertices = vec![];
    for (k, f) in g.facets.iter().enumerate() {
        let mut p = vec![Rat::zero(); dim];
        for w in f.bending() {
            let c = c_vector(bq, f, w)?;
            let m = *kn_of.get(w).ok_or(ComplexError::IncompleteUniverse)?;
            for (x, ci) in p.iter_mut().zip(&c) {
                *x += rat(m * ci);
            }
        }
        for (i, w) in walks.iter().enumerate() {
            let h = &halfspaces[i];
            let val = dot_rat(&h.normal, &p);
            let off = rat(h.offset);
            report.checked += 1;
            if f.contains(w) {
                if val != off {
                    report.fail(format!("vertex {k} is not tight on {}", h.walk));
                }
            } else if f.walks().iter().any(|x| !mutual_kiss(bq, w, x).is_zero()) {
                if val >= off {
                    report.fail(format!("vertex {k} is not strictly inside {}", h.walk));
                }
            } else if val > off {
                report.fail(format!("vertex {k} violates {}", h.walk));
            }
        }
        vertices.push(p);
    }
    report.checked += 1;
    let distinct: BTreeSet<&Vec<Rat>> = vertices.iter().collect();
    if distinct.len() != vertices.len() {
        report.fail("two facets share a vertex".to_string());
    }

    // Vertices of the H-description.
    let mut planes: Vec<usize> = vec![];
    let mut seen = BTreeSet::new();
    for (i, h) in halfspaces.iter().enumerate() {
        if h.normal.iter().any(|&x| x != 0) && seen.insert((h.normal.clone(), h.offset)) {
            planes.push(i);
        }
    }
    let feasible = |x: &[Rat]| halfspaces.iter().all(|h| dot_rat(&h.normal, x) <= rat(h.offset));
    let mut h_vertices: BTreeSet<Vec<Rat>> = BTreeSet::new();
    subsets(planes.len(), dim, &mut |s| {
        let a: Vec<Vec<Rat>> = s.iter().map(|&i| halfspaces[planes[i]].normal.iter().map(|&x| rat(x)).collect()).collect();
        let b: Vec<Rat> = s.iter().map(|&i| rat(halfspaces[planes[i]].offset)).collect();
        if let Some(x) = crate::linalg::solve(&a, &b) {
            if feasible(&x) {
                h_vertices.insert(x);
            }
        }
    });
    report.checked += 1;
    let v_vertices: BTreeSet<Vec<Rat>> = vertices.iter().cloned().collect();
    if h_vertices != v_vertices {
        report.fail(format!("{} vertices from halfspaces against {} from facets", h_vertices.len(), v_vertices.len()));
    }

    let tight = |x: &[Rat]| -> Vec<usize> {
        planes.iter().copied().filter(|&i| dot_rat(&halfspaces[i].normal, x) == rat(halfspaces[i].offset)).collect()
    };
    let tights: Vec<Vec<usize>> = vertices.iter().map(|p| tight(p)).collect();
    let normal_rank = |idx: &[usize]| rank(&idx.iter().map(|&i| halfspaces[i].normal.iter().map(|&x| rat(x)).collect()).collect::<Vec<_>>());

    let mut defining = vec![];
    for &i in &planes {
        let on: Vec<&Vec<Rat>> = vertices.iter().zip(&tights).filter(|(_, t)| t.contains(&i)).map(|(p, _)| p).collect();
        if on.is_empty() {
            continue;
        }
        let diffs: Vec<Vec<Rat>> = on.iter().skip(1).map(|p| p.iter().zip(on[0]).map(|(a, b)| a - b).collect()).collect();
        if rank(&diffs) + 1 == dim {
            defining.push(i);
        }
    }

    let mut edges = vec![];
    for u in 0..vertices.len() {
        for v in u + 1..vertices.len() {
            let common: Vec<usize> = tights[u].iter().copied().filter(|i| tights[v].contains(i)).collect();
            if normal_rank(&common) + 1 == dim {
                edges.push((u, v));
            }
        }
    }
    report.checked += 1;
    let flips: BTreeSet<(usize, usize)> = g.edges.iter().map(|e| (e.from.min(e.to), e.from.max(e.to))).collect();
    if flips != edges.iter().copied().collect() {
        report.fail("polytope edges differ from the flip graph".to_string());
    }
    Ok(Polytope { dim, vertices, halfspaces, defining, edges, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blossom::blossom;
    use crate::complex::enumerate_facets;
    use crate::enumerate::enumerate_walks;
    use crate::quiver::quiver;

    #[test]
    fn pentagon() {
        let b = blossom(&quiver(&["1", "2"], &[("a", "1", "2")], &[]).unwrap());
        let g = enumerate_facets(&b, 10).unwrap();
        let fan = build_fan(&b, &g).unwrap();
        assert!(fan.report.ok(), "{:?}", fan.report);
        assert_eq!(fan.cones.len(), 5);
        assert_eq!(fan.walls.len(), 5);
        let p = build_associahedron(&b, &g, &enumerate_walks(&b, 20)).unwrap();
        assert!(p.report.ok(), "{:?}", p.report);
        assert_eq!(p.vertices.len(), 5);
        assert_eq!(p.defining.len(), 5);
        assert_eq!(p.edges.len(), 5);
    }

    #[test]
    fn loop_fan_is_a_line() {
        let b = blossom(&quiver(&["1"], &[("c", "1", "1")], &[]).unwrap());
        let g = enumerate_facets(&b, 10).unwrap();
        let fan = build_fan(&b, &g).unwrap();
        assert!(fan.report.ok(), "{:?}", fan.report);
        assert_eq!(fan.rays, vec![vec![-1], vec![1]]);
        let all = enumerate_walks(&b, 20);
        assert!(!all.complete);
        assert!(matches!(build_associahedron(&b, &g, &all), Err(GeometryError::Complex(ComplexError::IncompleteUniverse))));
    }

    #[test]
    fn subsets_count() {
        let mut n = 0;
        subsets(6, 3, &mut |_| n += 1);
        assert_eq!(n, 20);
    }
}
