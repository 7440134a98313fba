//! Reading quivers off dissections, stripping and rebuilding the dual dissection.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::blossom::BlossomQuiver;
use crate::error::SurfaceError;
use crate::quiver::{BoundQuiver, RawArrow, RawQuiver};

use super::{Point, PointKind, Side, SurfaceModel};

/// Which of the two dissections to read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    D,
    DualD,
}

impl Which {
    fn side(self) -> Side {
        match self {
            Which::D => Side::Green,
            Which::DualD => Side::Red,
        }
    }
    fn kind(self) -> PointKind {
        match self {
            Which::D => PointKind::Green,
            Which::DualD => PointKind::Red,
        }
    }
    fn other(self) -> Which {
        match self {
            Which::D => Which::DualD,
            Which::DualD => Which::D,
        }
    }
}

fn is_interior(s: &SurfaceModel, d: usize) -> bool {
    s.side[d] != Side::Hole && s.side[s.twin[d]] != Side::Hole
}

/// Keeps boundary segments and the sides of one dissection.
fn keeps(s: &SurfaceModel, w: Which) -> impl Fn(usize) -> bool + '_ {
    move |d| s.side[d] == w.side() || !is_interior(s, d)
}

fn restricted_next(s: &SurfaceModel, keep: &dyn Fn(usize) -> bool, d: usize) -> usize {
    let mut y = s.rot_cw(s.twin[d]);
    while !keep(y) {
        y = s.rot_cw(y);
    }
    y
}

/// Faces of the submap made of the darts in `keep` (a union of edges).
pub(crate) fn restricted_faces(s: &SurfaceModel, keep: &dyn Fn(usize) -> bool) -> Vec<Vec<usize>> {
    let mut seen = vec![false; s.n_darts()];
    let mut out = vec![];
    for d in 0..s.n_darts() {
        if seen[d] || !keep(d) {
            continue;
        }
        let mut f = vec![];
        let mut x = d;
        while !seen[x] {
            seen[x] = true;
            f.push(x);
            x = restricted_next(s, keep, x);
        }
        out.push(f);
    }
    out
}

/// A kept dart on the face that swallows the dropped dart `d`.
fn anchor(s: &SurfaceModel, keep: &dyn Fn(usize) -> bool, d: usize) -> Option<usize> {
    let mut x = s.next[d];
    for _ in 0..s.n_darts() {
        if keep(x) {
            return Some(x);
        }
        x = s.next[x];
    }
    None
}

/// The faces of dissection `w` (boundary filled by hole faces excluded), each with the points
/// of the other colour it contains.
fn faces_with_duals(s: &SurfaceModel, w: Which) -> Vec<(Vec<usize>, BTreeSet<usize>)> {
    let keep = keeps(s, w);
    let faces = restricted_faces(s, &keep);
    let mut face_of = BTreeMap::new();
    for (k, f) in faces.iter().enumerate() {
        for &d in f {
            face_of.insert(d, k);
        }
    }
    let dual_kind = w.other().kind();
    let mut duals = vec![BTreeSet::new(); faces.len()];
    for (k, f) in faces.iter().enumerate() {
        for &d in f {
            if s.points[s.tail[d]].kind == dual_kind {
                duals[k].insert(s.tail[d]);
            }
        }
    }
    for d in 0..s.n_darts() {
        if !keep(d) && s.points[s.tail[d]].kind == dual_kind {
            if let Some(a) = anchor(s, &keep, d) {
                duals[face_of[&a]].insert(s.tail[d]);
            }
        }
    }
    for &(p, d) in &s.inside {
        if s.points[p].kind == dual_kind {
            duals[face_of[&d]].insert(p);
        }
    }
    faces
        .into_iter()
        .zip(duals)
        .filter(|(f, _)| !s.is_hole_face(f))
        .collect()
}

/// The blossoming quiver of dissection `w`: one vertex per edge (blossom points give the
/// leaves), one arrow per pair of edges consecutive counterclockwise around a point, and a
/// relation for each three consecutive edges of a face.
pub fn blossom_quiver_of_surface(s: &SurfaceModel, w: Which) -> Result<BlossomQuiver, SurfaceError> {
    s.check().map_err(SurfaceError::NotCellular)?;
    for (k, (_, duals)) in faces_with_duals(s, w).iter().enumerate() {
        if duals.len() != 1 {
            return Err(SurfaceError::NotDual(format!("face {k} contains {} dual points", duals.len())));
        }
    }
    let keep = keeps(s, w);
    let side = w.side();
    let colour = |d: usize| s.side[d] == side || (s.side[d] == Side::Hole && s.side[s.twin[d]] == side);
    let mut corners: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for g in 0..s.n_darts() {
        if s.side[g] != side || s.points[s.tail[g]].kind != w.kind() {
            continue;
        }
        let mut h = s.rot_ccw(g);
        while !keep(h) {
            h = s.rot_ccw(h);
        }
        if colour(h) {
            corners.insert(g, (s.head(g), s.head(h)));
        }
    }
    let unlabelled = corners.keys().any(|&g| s.lozenge[g].is_none());
    let arrow_name = |g: usize| if unlabelled { format!("x{g}") } else { s.lozenge[g].clone().unwrap() };
    let point_name = |p: usize| s.points[p].label.clone().unwrap_or_else(|| format!("e{p}"));

    let mut vertices = BTreeSet::new();
    for &(a, b) in corners.values() {
        for x in [a, b] {
            if !matches!(s.points[x].kind, PointKind::Black | PointKind::Blossom) {
                return Err(SurfaceError::NotCellular(format!("edge through point {x} has no middle point")));
            }
            vertices.insert(x);
        }
    }
    let mut relations = vec![];
    for &g in corners.keys() {
        let x = restricted_next(s, &keep, g);
        if s.side[x] != side {
            continue;
        }
        let y = restricted_next(s, &keep, x);
        if corners.contains_key(&y) {
            relations.push((arrow_name(y), arrow_name(g)));
        }
    }
    let raw = RawQuiver {
        vertices: vertices.iter().map(|&p| point_name(p)).collect(),
        arrows: corners
            .iter()
            .map(|(&g, &(a, b))| RawArrow { id: arrow_name(g), src: point_name(a), tgt: point_name(b) })
            .collect(),
        relations,
    };
    let full = BoundQuiver::from_raw(&raw).map_err(|e| SurfaceError::NotCellular(e.to_string()))?;
    BlossomQuiver::from_complete(full).map_err(|e| SurfaceError::NotCellular(e.to_string()))
}

pub fn quiver_from_surface(s: &SurfaceModel, w: Which) -> Result<BoundQuiver, SurfaceError> {
    Ok(blossom_quiver_of_surface(s, w)?.base().clone())
}

/// Drops the interior sides of the other dissection; points left without darts are recorded
/// inside their face.
pub fn strip(s: &SurfaceModel, w: Which) -> SurfaceModel {
    let keep = keeps(s, w);
    let kept: Vec<usize> = (0..s.n_darts()).filter(|&d| keep(d)).collect();
    let new_id: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let mut inside: Vec<(usize, usize)> = s.inside.iter().map(|&(p, d)| (p, new_id[&d])).collect();
    let alive: BTreeSet<usize> = kept.iter().map(|&d| s.tail[d]).collect();
    let mut placed = BTreeSet::new();
    for d in 0..s.n_darts() {
        let p = s.tail[d];
        if !keep(d) && !alive.contains(&p) && placed.insert(p) {
            if let Some(a) = anchor(s, &keep, d) {
                inside.push((p, new_id[&a]));
            }
        }
    }
    inside.sort();
    SurfaceModel {
        twin: kept.iter().map(|&d| new_id[&s.twin[d]]).collect(),
        next: kept.iter().map(|&d| new_id[&restricted_next(s, &keep, d)]).collect(),
        tail: kept.iter().map(|&d| s.tail[d]).collect(),
        side: kept.iter().map(|&d| s.side[d]).collect(),
        lozenge: kept.iter().map(|&d| s.lozenge[d].clone()).collect(),
        points: s.points.clone(),
        inside,
    }
}

/// Rebuilds `D*` from a surface carrying `D` only: the dual point of each face is joined to the
/// middle points of the edges around it, cutting the face into lozenges.
pub fn dual_dissection(s: &SurfaceModel) -> Result<SurfaceModel, SurfaceError> {
    s.check().map_err(SurfaceError::NotCellular)?;
    let s = &strip(s, Which::D);
    let faces = s.faces();
    let mut out = s.clone();
    let mut used_inside = BTreeSet::new();
    let mut k = 0;
    for f in &faces {
        if s.is_hole_face(f) {
            continue;
        }
        let mut duals: Vec<usize> = f.iter().map(|&d| s.tail[d]).filter(|&p| s.points[p].kind == PointKind::Red).collect();
        duals.extend(s.inside.iter().filter(|x| f.contains(&x.1) && s.points[x.0].kind == PointKind::Red).map(|x| x.0));
        duals.sort();
        duals.dedup();
        match duals.len() {
            0 => return Err(SurfaceError::MissingDualPoint(k)),
            1 => {}
            n => return Err(SurfaceError::MultipleDualPoints(k, n)),
        }
        let fv = duals[0];
        let on_boundary = f.iter().position(|&d| s.tail[d] == fv);
        let (ends, middle): (Option<(usize, usize)>, Vec<usize>) = match on_boundary {
            Some(i) => {
                let rot: Vec<usize> = f[i..].iter().chain(&f[..i]).copied().collect();
                (Some((rot[0], rot[rot.len() - 1])), rot[1..rot.len() - 1].to_vec())
            }
            None => {
                used_inside.insert(fv);
                let i = f.iter().position(|&d| s.points[s.tail[d]].kind != PointKind::Green).unwrap_or(0);
                (None, f[i..].iter().chain(&f[..i]).copied().collect())
            }
        };
        let bad = || SurfaceError::NotCellular(format!("face {k} is not cut into corners by its edges"));
        if middle.is_empty() || middle.len() % 2 != 0 {
            return Err(bad());
        }
        for (i, &d) in middle.iter().enumerate() {
            let green_tail = s.points[s.tail[d]].kind == PointKind::Green;
            if green_tail != (i % 2 == 1) || s.side[d] != Side::Green || s.points[s.head(d)].kind == PointKind::Red {
                return Err(bad());
            }
        }
        let n = middle.len() / 2;
        let mut d0 = vec![0; n];
        let mut d1 = vec![0; n];
        for i in 0..n {
            let (t2, t3) = (middle[2 * i], middle[2 * i + 1]);
            let label = s.lozenge[t3].clone();
            let mut fresh = |tail: usize| {
                out.twin.push(usize::MAX);
                out.next.push(usize::MAX);
                out.tail.push(tail);
                out.side.push(Side::Red);
                out.lozenge.push(label.clone());
                out.twin.len() - 1
            };
            d0[i] = match ends {
                Some((_, last)) if i == n - 1 => last,
                _ => fresh(s.head(t3)),
            };
            d1[i] = match ends {
                Some((first, _)) if i == 0 => first,
                _ => fresh(fv),
            };
            out.lozenge[d0[i]] = label.clone();
            out.lozenge[d1[i]] = label;
            out.next[d0[i]] = d1[i];
            out.next[d1[i]] = t2;
            out.next[t2] = t3;
            out.next[t3] = d0[i];
        }
        for i in 0..n {
            let j = (i + 1) % n;
            if j == 0 && ends.is_some() {
                continue;
            }
            out.twin[d0[i]] = d1[j];
            out.twin[d1[j]] = d0[i];
        }
        k += 1;
    }
    out.inside.retain(|x| !used_inside.contains(&x.0));
    out.check().map_err(SurfaceError::NotCellular)?;
    Ok(out)
}

/// Exchanges the roles of `D` and `D*`.
pub fn swap_dissections(s: &SurfaceModel) -> SurfaceModel {
    let mut out = s.clone();
    for x in &mut out.side {
        *x = match *x {
            Side::Green => Side::Red,
            Side::Red => Side::Green,
            Side::Hole => Side::Hole,
        };
    }
    for p in &mut out.points {
        p.kind = match p.kind {
            PointKind::Green => PointKind::Red,
            PointKind::Red => PointKind::Green,
            k => k,
        };
    }
    out
}

fn point_key(p: &Point, labels: bool) -> (PointKind, Option<String>) {
    (p.kind, if labels { p.label.clone() } else { None })
}

/// Isomorphism of maps preserving dart classes and point kinds (and labels if asked).
pub fn maps_isomorphic(a: &SurfaceModel, b: &SurfaceModel, labels: bool) -> bool {
    let n = a.n_darts();
    if n != b.n_darts() || a.points.len() != b.points.len() || a.inside.len() != b.inside.len() {
        return false;
    }
    let dart_key = |s: &SurfaceModel, d: usize| {
        (s.side[d], point_key(&s.points[s.tail[d]], labels), if labels { s.lozenge[d].clone() } else { None })
    };
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for start in 0..n {
        if phi[start] != usize::MAX {
            continue;
        }
        let found = (0..n).filter(|&c| !used[c]).find_map(|cand| {
            let mut trial = phi.clone();
            let mut taken = used.clone();
            let mut queue = VecDeque::from([(start, cand)]);
            while let Some((x, y)) = queue.pop_front() {
                if trial[x] == y {
                    continue;
                }
                if trial[x] != usize::MAX || taken[y] || dart_key(a, x) != dart_key(b, y) {
                    return None;
                }
                trial[x] = y;
                taken[y] = true;
                queue.push_back((a.twin[x], b.twin[y]));
                queue.push_back((a.next[x], b.next[y]));
            }
            Some((trial, taken))
        });
        match found {
            Some((p, u)) => {
                phi = p;
                used = u;
            }
            None => return false,
        }
    }
    let mut pt = BTreeMap::new();
    for d in 0..n {
        if *pt.entry(a.tail[d]).or_insert(b.tail[phi[d]]) != b.tail[phi[d]] {
            return false;
        }
    }
    let image: BTreeSet<usize> = pt.values().copied().collect();
    if image.len() != pt.len() {
        return false;
    }
    let inner = |s: &SurfaceModel, map: &dyn Fn(usize) -> usize| {
        let mut v: Vec<(PointKind, usize)> = s.inside.iter().map(|&(p, d)| (s.points[p].kind, map(d))).collect();
        v.sort();
        v
    };
    let fa = a.face_index();
    let fb = b.face_index();
    // Inner points must sit in corresponding faces.
    inner(a, &|d| fb[phi[d]]) == inner(b, &|d| fb[d]) && fa.len() == fb.len()
}
