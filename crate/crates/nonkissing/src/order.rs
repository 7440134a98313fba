//! The countercurrent order on walks marked at an arrow.

use std::cmp::Ordering;

use crate::error::ComplexError;
use crate::walk::Walk;

/// A walk with a marked position. Position conventions follow [`Walk::letter_at`].
#[derive(Debug, Clone, Copy)]
pub struct MarkedWalk<'a> {
    pub walk: &'a Walk,
    pub pos: i64,
}

/// Orientation of `m` in which the mark reads as a positive letter.
fn oriented(m: MarkedWalk<'_>) -> (Walk, i64) {
    if m.walk.letter_at(m.pos).is_pos() {
        (m.walk.clone(), m.pos)
    } else {
        (m.walk.reversed(), m.walk.body_len() as i64 - 1 - m.pos)
    }
}

fn reach(w: &Walk) -> i64 {
    (w.body_len() + 2 * (w.left.len() + w.right.len())) as i64
}

/// Sign vote at the first split on one side: `Some(Less)` if the first walk leaves with a
/// positive letter, `None` if the walks never split on that side.
fn split(a: &Walk, pa: i64, b: &Walk, pb: i64, step: i64, limit: i64) -> Option<Ordering> {
    let mut k = 1;
    loop {
        let x = a.try_letter(pa + step * k);
        let y = b.try_letter(pb + step * k);
        match (x, y) {
            (None, None) => return None,
            (Some(x), Some(y)) if x == y => {
                if k > limit {
                    return None;
                }
                k += 1;
            }
            (x, y) => {
                return Some(match (x.map(|l| l.is_pos()), y.map(|l| l.is_pos())) {
                    (Some(true), _) | (_, Some(false)) => Ordering::Less,
                    _ => Ordering::Greater,
                })
            }
        }
    }
}

/// Compares two marked walks at arrow `alpha` (both marks must read `alpha` up to sign).
/// Returns `Less` when `m ≺ n`.
pub fn countercurrent_cmp(m: MarkedWalk<'_>, n: MarkedWalk<'_>, alpha: usize) -> Result<Ordering, ComplexError> {
    debug_assert_eq!(m.walk.letter_at(m.pos).arrow(), alpha);
    debug_assert_eq!(n.walk.letter_at(n.pos).arrow(), alpha);
    let (a, pa) = oriented(m);
    let (b, pb) = oriented(n);
    let limit = reach(&a) + reach(&b) + 2;
    let right = split(&a, pa, &b, pb, 1, limit);
    let left = split(&a, pa, &b, pb, -1, limit);
    match (left, right) {
        (None, None) => Err(ComplexError::SameMarkedWalk),
        (Some(x), Some(y)) if x != y => Err(ComplexError::KissingPair),
        (Some(x), _) | (None, Some(x)) => Ok(x),
    }
}

pub fn countercurrent_less(m: MarkedWalk<'_>, n: MarkedWalk<'_>, alpha: usize) -> Result<bool, ComplexError> {
    Ok(countercurrent_cmp(m, n, alpha)? == Ordering::Less)
}

/// Positions of `alpha` compared in the order: the body and one period of each tail, or a single
/// position on a bi-infinite straight walk.
pub fn occurrences(w: &Walk, alpha: usize) -> Vec<i64> {
    let nb = w.body_len() as i64;
    let lo = -(w.left.len() as i64);
    let hi = nb + w.right.len() as i64;
    let mut out: Vec<i64> = (lo..hi).filter(|&i| w.letter_at(i).arrow() == alpha).collect();
    if w.body.is_empty() && w.has_left_tail() && w.left == w.right {
        out.retain(|&i| i >= 0);
        out.truncate(1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blossom::blossom;
    use crate::quiver::quiver;
    use crate::walk::{deep_walk, peak_walk};

    #[test]
    fn a2_walks_through_a_are_ordered() {
        let b = blossom(&quiver(&["1", "2"], &[("a", "1", "2")], &[]).unwrap());
        let a = b.quiver().arrow_index("a").unwrap();
        let p1 = peak_walk(&b, 0);
        let p2 = Walk::parse(&b, "1+in2+ a+ 2+out2+").unwrap();
        let m = MarkedWalk { walk: &p1, pos: occurrences(&p1, a)[0] };
        let n = MarkedWalk { walk: &p2, pos: occurrences(&p2, a)[0] };
        let x = countercurrent_cmp(m, n, a).unwrap();
        let y = countercurrent_cmp(n, m, a).unwrap();
        assert_eq!(x, y.reverse());
        assert!(matches!(countercurrent_cmp(m, m, a), Err(ComplexError::SameMarkedWalk)));
    }

    #[test]
    fn kissing_pair_detected() {
        let b = blossom(&quiver(&["1", "2"], &[("a", "1", "2")], &[]).unwrap());
        let a = b.quiver().arrow_index("a").unwrap();
        let p = peak_walk(&b, 0);
        let d = deep_walk(&b, 1);
        let m = MarkedWalk { walk: &p, pos: occurrences(&p, a)[0] };
        let n = MarkedWalk { walk: &d, pos: occurrences(&d, a)[0] };
        assert!(matches!(countercurrent_cmp(m, n, a), Err(ComplexError::KissingPair)));
    }
}
