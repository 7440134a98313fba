//! Walks as curves: a curve runs through the lozenges, hugging one point of `V` in each, and
//! crosses an edge of `D` at its middle point between two lozenges.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::blossom::BlossomQuiver;
use crate::error::SurfaceError;
use crate::kiss::{mutual_kiss, KissCount};
use crate::walk::{Letter, Walk};

use super::dissection::{blossom_quiver_of_surface, Which};
use super::{PointKind, Side, SurfaceModel};

/// Passage through one lozenge between its two green sides, leaving the side `from` lies on
/// for the side `to` lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Angle {
    pub from: usize,
    pub to: usize,
}

/// An end of a curve winding forever around a puncture.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Spiral {
    pub puncture: usize,
    /// +1 counterclockwise.
    pub sign: i8,
    /// One turn, in reading order.
    pub cycle: Vec<Angle>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingSequence {
    pub surface: u64,
    pub start: Option<Spiral>,
    pub angles: Vec<Angle>,
    pub end: Option<Spiral>,
    /// Middle points crossed between consecutive angles, from the last angle of the start
    /// spiral to the first angle of the end spiral.
    pub crossings: Vec<usize>,
}

/// The two green darts of each lozenge: `[v -> s, t -> v]`.
fn lozenge_darts(s: &SurfaceModel) -> Result<BTreeMap<&str, (usize, usize)>, SurfaceError> {
    let mut out: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for d in 0..s.n_darts() {
        if s.side[d] != Side::Green || s.points[s.tail[d]].kind != PointKind::Green {
            continue;
        }
        let name = s.lozenge[d].as_deref().ok_or(SurfaceError::Unlabelled)?;
        out.insert(name, (d, s.prev(d)));
    }
    Ok(out)
}

fn black_start(s: &SurfaceModel, a: Angle) -> usize {
    if s.points[s.tail[a.from]].kind == PointKind::Green {
        s.head(a.from)
    } else {
        s.tail[a.from]
    }
}

fn black_end(s: &SurfaceModel, a: Angle) -> usize {
    if s.points[s.tail[a.to]].kind == PointKind::Green {
        s.head(a.to)
    } else {
        s.tail[a.to]
    }
}

fn green_of(s: &SurfaceModel, a: Angle) -> usize {
    if s.points[s.tail[a.from]].kind == PointKind::Green {
        s.tail[a.from]
    } else {
        s.tail[a.to]
    }
}

fn joined(start: &Option<Spiral>, angles: &[Angle], end: &Option<Spiral>) -> Vec<Angle> {
    let first = start.as_ref().and_then(|sp| sp.cycle.last().copied());
    let last = end.as_ref().and_then(|sp| sp.cycle.first().copied());
    first.into_iter().chain(angles.iter().copied()).chain(last).collect()
}

pub fn curve_of_walk(s: &SurfaceModel, bq: &BlossomQuiver, w: &Walk) -> Result<CrossingSequence, SurfaceError> {
    let darts = lozenge_darts(s)?;
    let angle = |l: Letter| -> Result<Angle, SurfaceError> {
        let &(d3, d2) = darts.get(bq.quiver().arrow_id(l.arrow())).ok_or(SurfaceError::Unlabelled)?;
        Ok(if l.is_pos() { Angle { from: d3, to: d2 } } else { Angle { from: d2, to: d3 } })
    };
    let spiral = |letters: &[Letter]| -> Result<Option<Spiral>, SurfaceError> {
        if letters.is_empty() {
            return Ok(None);
        }
        let cycle = letters.iter().map(|&l| angle(l)).collect::<Result<Vec<_>, _>>()?;
        Ok(Some(Spiral { puncture: green_of(s, cycle[0]), sign: letters[0].sign(), cycle }))
    };
    let angles = w.body.iter().map(|&l| angle(l)).collect::<Result<Vec<_>, _>>()?;
    let (start, end) = (spiral(&w.left)?, spiral(&w.right)?);
    let crossings = joined(&start, &angles, &end).windows(2).map(|p| black_end(s, p[0])).collect();
    Ok(CrossingSequence { surface: s.fingerprint(), start, angles, end, crossings })
}

/// Reads a crossing sequence back as a walk of the blossoming quiver of `D`.
pub fn walk_of_curve(s: &SurfaceModel, cs: &CrossingSequence) -> Result<(BlossomQuiver, Walk), SurfaceError> {
    if cs.surface != s.fingerprint() {
        return Err(SurfaceError::DifferentSurface);
    }
    let bq = blossom_quiver_of_surface(s, Which::D)?;
    let darts = lozenge_darts(s)?;
    let letter = |k: usize, a: Angle| -> Result<Letter, SurfaceError> {
        let name = s.lozenge[a.from].as_deref().ok_or(SurfaceError::Unlabelled)?;
        let &(d3, d2) = darts.get(name).ok_or(SurfaceError::BrokenCurve(k))?;
        let arrow = bq.quiver().arrow_index(name).ok_or(SurfaceError::Unlabelled)?;
        match (a.from, a.to) {
            (x, y) if (x, y) == (d3, d2) => Ok(Letter::pos(arrow)),
            (x, y) if (x, y) == (d2, d3) => Ok(Letter::neg(arrow)),
            _ => Err(SurfaceError::BrokenCurve(k)),
        }
    };
    let body = cs.angles.iter().enumerate().map(|(k, &a)| letter(k, a)).collect::<Result<Vec<_>, _>>()?;
    let seq = joined(&cs.start, &cs.angles, &cs.end);
    if cs.crossings.len() != seq.len().saturating_sub(1) {
        return Err(SurfaceError::BrokenCurve(cs.crossings.len().min(seq.len())));
    }
    for (k, p) in seq.windows(2).enumerate() {
        if p[1].from == p[0].to && p[1].to == p[0].from {
            return Err(SurfaceError::NotReducedCrossing(k));
        }
        let via = black_end(s, p[0]);
        if black_start(s, p[1]) != via || cs.crossings[k] != via {
            return Err(SurfaceError::BrokenCurve(k));
        }
    }
    let n = cs.angles.len();
    let tail = |sp: &Option<Spiral>| -> Result<Vec<Letter>, SurfaceError> {
        let Some(sp) = sp else { return Ok(vec![]) };
        let mut out = vec![];
        for &a in &sp.cycle {
            let l = letter(n, a)?;
            if green_of(s, a) != sp.puncture || l.sign() != sp.sign {
                return Err(SurfaceError::BrokenCurve(n));
            }
            out.push(l);
        }
        Ok(out)
    };
    let raw = Walk { left: tail(&cs.start)?, body, right: tail(&cs.end)? };
    let w = Walk::canonicalize(&bq, &raw)?;
    Ok((bq, w))
}

/// Number of crossings of two curves, counted as kisses of their walks.
pub fn crossing_count(s: &SurfaceModel, c1: &CrossingSequence, c2: &CrossingSequence) -> Result<KissCount, SurfaceError> {
    let (bq, w1) = walk_of_curve(s, c1)?;
    let (_, w2) = walk_of_curve(s, c2)?;
    Ok(mutual_kiss(&bq, &w1, &w2))
}
