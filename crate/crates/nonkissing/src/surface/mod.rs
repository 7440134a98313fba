//! The marked surface of a bound quiver, as a combinatorial map.
//!
//! Each arrow of the blossoming quiver contributes a lozenge `s -> f -> t -> v` (counterclockwise),
//! with green sides `[v, s]`, `[v, t]` and red sides `[f, s]`, `[f, t]`. Green sides make up the
//! dissection `D` and red ones the dual dissection `D*`; black points are the crossings of an edge
//! of `D` with its dual edge. Every boundary component is closed off by a hole face, so the map is
//! a closed orientable surface with the boundary filled in.

mod build;
mod curve;
mod dissection;

use std::collections::BTreeSet;
use std::hash::{Hash, Hasher};

use serde_json::{json, Value};

pub use build::{boundary_count_from_matchings, invariants, surface_from_blossom, surface_from_quiver, Invariants};
pub use curve::{crossing_count, curve_of_walk, walk_of_curve, Angle, CrossingSequence, Spiral};
pub use dissection::{
    blossom_quiver_of_surface, dual_dissection, maps_isomorphic, quiver_from_surface, strip, swap_dissections, Which,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointKind {
    /// A point of `V`.
    Green,
    /// A point of `V*`.
    Red,
    /// Middle point of an edge of `D` (and of its dual edge).
    Black,
    /// Blossom point on the boundary.
    Blossom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Green,
    Red,
    /// Outer side of a boundary segment.
    Hole,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub kind: PointKind,
    /// Vertex id for black and blossom points.
    pub label: Option<String>,
}

/// Darts with a fixed-point-free involution `twin` and a face permutation `next`. The rotation
/// around a point is `next ∘ twin` (clockwise).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurfaceModel {
    pub(crate) twin: Vec<usize>,
    pub(crate) next: Vec<usize>,
    pub(crate) tail: Vec<usize>,
    pub(crate) side: Vec<Side>,
    /// Arrow id of the lozenge a dart was cut from.
    pub(crate) lozenge: Vec<Option<String>>,
    pub(crate) points: Vec<Point>,
    /// Points without darts, each with a dart on the face that contains it.
    pub(crate) inside: Vec<(usize, usize)>,
}

impl SurfaceModel {
    pub fn n_darts(&self) -> usize {
        self.twin.len()
    }
    pub fn points(&self) -> &[Point] {
        &self.points
    }
    pub fn twin(&self, d: usize) -> usize {
        self.twin[d]
    }
    pub fn next(&self, d: usize) -> usize {
        self.next[d]
    }
    pub fn tail(&self, d: usize) -> usize {
        self.tail[d]
    }
    pub fn head(&self, d: usize) -> usize {
        self.tail[self.twin[d]]
    }
    pub fn side(&self, d: usize) -> Side {
        self.side[d]
    }
    pub fn lozenge(&self, d: usize) -> Option<&str> {
        self.lozenge[d].as_deref()
    }
    pub fn prev(&self, d: usize) -> usize {
        let mut x = d;
        loop {
            let y = self.next[x];
            if y == d {
                return x;
            }
            x = y;
        }
    }
    pub fn rot_cw(&self, d: usize) -> usize {
        self.next[self.twin[d]]
    }
    pub fn rot_ccw(&self, d: usize) -> usize {
        self.twin[self.prev(d)]
    }

    /// Faces as dart cycles, each starting at its least dart.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n_darts()];
        let mut out = vec![];
        for d in 0..self.n_darts() {
            if seen[d] {
                continue;
            }
            let mut f = vec![];
            let mut x = d;
            while !seen[x] {
                seen[x] = true;
                f.push(x);
                x = self.next[x];
            }
            out.push(f);
        }
        out
    }

    pub fn face_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n_darts()];
        for (k, f) in self.faces().iter().enumerate() {
            for &d in f {
                idx[d] = k;
            }
        }
        idx
    }

    pub fn is_hole_face(&self, f: &[usize]) -> bool {
        f.iter().all(|&d| self.side[d] == Side::Hole)
    }

    /// Points touching a boundary segment.
    pub fn boundary_points(&self) -> BTreeSet<usize> {
        (0..self.n_darts()).filter(|&d| self.side[d] == Side::Hole).map(|d| self.tail[d]).collect()
    }

    /// Interior green and red points.
    pub fn punctures(&self) -> Vec<usize> {
        let bd = self.boundary_points();
        (0..self.points.len())
            .filter(|p| !bd.contains(p) && matches!(self.points[*p].kind, PointKind::Green | PointKind::Red))
            .collect()
    }

    /// Structural sanity: involution, face permutation and endpoints agree.
    pub fn check(&self) -> Result<(), String> {
        let n = self.n_darts();
        if [self.next.len(), self.tail.len(), self.side.len(), self.lozenge.len()].iter().any(|&m| m != n) {
            return Err("dart tables have different lengths".into());
        }
        let mut hit = vec![false; n];
        for d in 0..n {
            let (t, x) = (self.twin[d], self.next[d]);
            if t >= n || x >= n || self.tail[d] >= self.points.len() {
                return Err(format!("dart {d} points out of range"));
            }
            if t == d || self.twin[t] != d {
                return Err(format!("twin is not an involution at dart {d}"));
            }
            if hit[x] {
                return Err(format!("next is not a permutation at dart {x}"));
            }
            hit[x] = true;
            if self.tail[x] != self.tail[t] {
                return Err(format!("dart {d} and its successor do not meet"));
            }
            if self.side[d] == Side::Hole && self.side[t] == Side::Hole {
                return Err(format!("dart {d} lies between two holes"));
            }
        }
        for d in (0..n).filter(|&d| self.side[d] == Side::Hole) {
            let marked = |p: usize| matches!(self.points[p].kind, PointKind::Green | PointKind::Red);
            if marked(self.tail[d]) == marked(self.tail[self.next[d]]) {
                return Err(format!("boundary does not alternate at dart {d}"));
            }
        }
        for &(p, d) in &self.inside {
            if p >= self.points.len() || d >= n || self.tail.contains(&p) {
                return Err(format!("bad inner point {p}"));
            }
        }
        Ok(())
    }

    /// Points without darts, with a dart of the face holding them.
    pub fn inner_points(&self) -> &[(usize, usize)] {
        &self.inside
    }

    /// Drops a new point without darts into the face of `dart`.
    pub fn add_inner_point(&mut self, kind: PointKind, dart: usize) -> usize {
        self.points.push(Point { kind, label: None });
        let p = self.points.len() - 1;
        self.inside.push((p, dart));
        p
    }

    /// Forgets that `p` sits inside a face; the point itself stays (without darts).
    pub fn remove_inner_point(&mut self, p: usize) {
        self.inside.retain(|x| x.0 != p);
    }

    /// Stable hash of the whole structure, used to tell surfaces apart.
    pub fn fingerprint(&self) -> u64 {
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.hash(&mut h);
        h.finish()
    }

    pub fn to_json_value(&self) -> Value {
        let faces = self.faces();
        let face_of = self.face_index();
        let bd = self.boundary_points();
        let kind = |k: PointKind| match k {
            PointKind::Green => "V",
            PointKind::Red => "V*",
            PointKind::Black => "edge",
            PointKind::Blossom => "B",
        };
        let side = |s: Side| match s {
            Side::Green => "D",
            Side::Red => "D*",
            Side::Hole => "boundary",
        };
        let inner_face = |p: usize| self.inside.iter().find(|x| x.0 == p).map(|x| face_of[x.1]);
        json!({
            "darts": (0..self.n_darts()).map(|d| json!({
                "id": d,
                "tail": self.tail[d],
                "twin": self.twin[d],
                "next": self.next[d],
                "rotation": self.rot_cw(d),
                "class": side(self.side[d]),
                "lozenge": self.lozenge[d],
            })).collect::<Vec<_>>(),
            "points": self.points.iter().enumerate().map(|(i, p)| json!({
                "id": i,
                "class": kind(p.kind),
                "label": p.label,
                "boundary": bd.contains(&i),
                "puncture": !bd.contains(&i) && matches!(p.kind, PointKind::Green | PointKind::Red),
                "inside_face": inner_face(i),
            })).collect::<Vec<_>>(),
            "faces": faces.iter().enumerate().map(|(i, f)| json!({
                "id": i,
                "darts": f,
                "hole": self.is_hole_face(f),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Minimal union-find.
pub(crate) struct Dsu(Vec<usize>);

impl Dsu {
    pub(crate) fn new(n: usize) -> Dsu {
        Dsu((0..n).collect())
    }
    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let z = self.0[y];
            self.0[y] = r;
            y = z;
        }
        r
    }
    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}
