//! Gluing lozenges, and topological invariants.

use std::collections::BTreeMap;

use crate::blossom::{blossom, BlossomQuiver};
use crate::error::SurfaceError;
use crate::quiver::BoundQuiver;

use super::dissection::{blossom_quiver_of_surface, restricted_faces, Which};
use super::{Dsu, Point, PointKind, Side, SurfaceModel};

pub fn surface_from_quiver(q: &BoundQuiver) -> SurfaceModel {
    surface_from_blossom(&blossom(q))
}

pub fn surface_from_blossom(bq: &BlossomQuiver) -> SurfaceModel {
    let q = bq.quiver();
    let m = q.n_arrows();
    let mut twin: Vec<Option<usize>> = vec![None; 4 * m];
    // slots: f(a) = a, v(a) = m + a
    let mut slots = Dsu::new(2 * m);
    for a in 0..m {
        for b in q.out_arrows(q.tgt(a)) {
            if q.is_relation(a, b) {
                twin[4 * a + 1] = Some(4 * b);
                twin[4 * b] = Some(4 * a + 1);
                slots.union(a, b);
            } else {
                twin[4 * a + 2] = Some(4 * b + 3);
                twin[4 * b + 3] = Some(4 * a + 2);
                slots.union(m + a, m + b);
            }
        }
    }

    let mut points: Vec<Point> = (0..q.n_vertices())
        .map(|v| Point {
            kind: if bq.is_leaf(v) { PointKind::Blossom } else { PointKind::Black },
            label: Some(q.vertex_id(v).to_string()),
        })
        .collect();
    let mut class: BTreeMap<usize, usize> = BTreeMap::new();
    for (offset, kind) in [(m, PointKind::Green), (0, PointKind::Red)] {
        for a in 0..m {
            let r = slots.find(offset + a);
            if let std::collections::btree_map::Entry::Vacant(e) = class.entry(r) {
                e.insert(points.len());
                points.push(Point { kind, label: None });
            }
        }
    }

    let mut tail = vec![0; 4 * m];
    let mut side = vec![Side::Green; 4 * m];
    let mut lozenge = vec![None; 4 * m];
    let mut next: Vec<usize> = (0..4 * m).map(|d| 4 * (d / 4) + (d + 1) % 4).collect();
    for a in 0..m {
        tail[4 * a] = q.src(a);
        tail[4 * a + 1] = class[&slots.find(a)];
        tail[4 * a + 2] = q.tgt(a);
        tail[4 * a + 3] = class[&slots.find(m + a)];
        side[4 * a] = Side::Red;
        side[4 * a + 1] = Side::Red;
        for k in 0..4 {
            lozenge[4 * a + k] = Some(q.arrow_id(a).to_string());
        }
    }

    // Close every boundary component with a hole face.
    let prev = |d: usize| 4 * (d / 4) + (d + 3) % 4;
    let open: Vec<usize> = (0..4 * m).filter(|&d| twin[d].is_none()).collect();
    let mut hole_of = BTreeMap::new();
    for (k, &d) in open.iter().enumerate() {
        hole_of.insert(d, 4 * m + k);
    }
    let mut full_twin: Vec<usize> = twin.iter().enumerate().map(|(d, t)| t.unwrap_or_else(|| hole_of[&d])).collect();
    for &d in &open {
        let h = hole_of[&d];
        full_twin.push(d);
        tail.push(tail[next[d]]);
        side.push(Side::Hole);
        lozenge.push(None);
        let mut x = d;
        let e = loop {
            let p = prev(x);
            match twin[p] {
                Some(t) => x = t,
                None => break p,
            }
        };
        next.push(hole_of[&e]);
        debug_assert_eq!(next.len(), h + 1);
    }
    SurfaceModel { twin: full_twin, next, tail, side, lozenge, points, inside: vec![] }
}

/// Counts and topology of a surface.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Invariants {
    /// Boundary components.
    pub b: usize,
    /// Punctures in `V` and in `V*`.
    pub p: usize,
    pub p_dual: usize,
    pub genus: i64,
    /// Euler characteristic of the closed surface (boundary filled in).
    pub euler: i64,
    pub components: usize,
    /// Faces of `D` once the boundary is filled in.
    pub d_faces: usize,
}

/// Reads the invariants off the map and checks them against the counts of the quiver of `D`
/// and against the cell structure of `D` alone.
pub fn invariants(s: &SurfaceModel) -> Result<Invariants, SurfaceError> {
    s.check().map_err(SurfaceError::NotCellular)?;
    let faces = s.faces();
    let b = faces.iter().filter(|f| s.is_hole_face(f)).count();
    let punct = s.punctures();
    let p = punct.iter().filter(|&&x| s.points[x].kind == PointKind::Green).count();
    let p_dual = punct.len() - p;
    let used: std::collections::BTreeSet<usize> = s.tail.iter().copied().collect();
    let euler = used.len() as i64 - (s.n_darts() / 2) as i64 + faces.len() as i64;
    let mut dsu = Dsu::new(s.n_darts());
    for d in 0..s.n_darts() {
        dsu.union(d, s.twin[d]);
        dsu.union(d, s.next[d]);
    }
    let components = (0..s.n_darts()).filter(|&d| dsu.find(d) == d).count();
    if (2 * components as i64 - euler) % 2 != 0 {
        return Err(SurfaceError::InconsistentEuler(format!("odd Euler characteristic {euler}")));
    }
    let genus = (2 * components as i64 - euler) / 2;

    let bq = blossom_quiver_of_surface(s, Which::D)?;
    let q = bq.base();
    let (n0, n1) = (q.n_vertices() as i64, q.n_arrows() as i64);
    let mb = boundary_count_from_matchings(&bq);
    if mb != b {
        return Err(SurfaceError::InconsistentEuler(format!("{b} boundary cycles, the matchings give {mb}")));
    }
    let dual = BlossomQuiver::from_complete(bq.quiver().koszul_dual()).map_err(|e| SurfaceError::NotCellular(e.to_string()))?;
    let (ps, pds) = (bq.count_straight_cycles(), dual.count_straight_cycles());
    if (ps, pds) != (p, p_dual) {
        return Err(SurfaceError::InconsistentEuler(format!(
            "punctures ({p}, {p_dual}), infinite straight walks ({ps}, {pds})"
        )));
    }
    let formula = n1 - n0 - b as i64 - p as i64 - p_dual as i64 + 2 * components as i64;
    if formula != 2 * genus {
        return Err(SurfaceError::InconsistentEuler(format!(
            "map genus {genus}, quiver counts give {formula}/2"
        )));
    }

    // D alone, boundary filled: only interior edges of D.
    let keep = |d: usize| s.side[d] == Side::Green && [s.tail[d], s.head(d)].iter().all(|&x| s.points[x].kind != PointKind::Blossom);
    let d_cells = restricted_faces(s, &keep);
    let d_faces = d_cells.len();
    let d_darts = (0..s.n_darts()).filter(|&d| keep(d)).count();
    let d_points: std::collections::BTreeSet<usize> = (0..s.n_darts()).filter(|&d| keep(d)).map(|d| s.tail[d]).collect();
    let greens = d_points.iter().filter(|&&x| s.points[x].kind == PointKind::Green).count() as i64;
    let d_euler = d_points.len() as i64 - (d_darts / 2) as i64 + d_faces as i64;
    if d_euler != euler {
        return Err(SurfaceError::InconsistentEuler(format!("D alone gives {d_euler}, the map gives {euler}")));
    }
    if d_faces != b + p_dual {
        return Err(SurfaceError::InconsistentEuler(format!("{d_faces} faces of D, expected {}", b + p_dual)));
    }
    if greens != 2 * n0 - n1 + p as i64 {
        return Err(SurfaceError::InconsistentEuler(format!("{greens} points of V, expected {}", 2 * n0 - n1 + p as i64)));
    }
    Ok(Invariants { b, p, p_dual, genus, euler, components, d_faces })
}

/// Boundary components from the two perfect matchings of the blossom vertices given by finite
/// relation-free paths and by finite chains of relations.
pub fn boundary_count_from_matchings(bq: &BlossomQuiver) -> usize {
    let q = bq.quiver();
    let n = q.n_vertices();
    let mut dsu = Dsu::new(n);
    for v in bq.blossom_vertices() {
        let Some(&a) = q.out_arrows(v).first() else { continue };
        for role in [0, 1] {
            let mut x = a;
            while let Some(y) = q.role_neighbours(x)[role] {
                x = y;
            }
            dsu.union(v, q.tgt(x));
        }
    }
    bq.blossom_vertices().into_iter().filter(|&v| dsu.find(v) == v).count()
}
