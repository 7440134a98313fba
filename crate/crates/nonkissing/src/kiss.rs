//! Kissing numbers.
//!
//! A kiss of `w1` on `w2` is a finite common factor that is on top of `w1` (both neighbouring
//! arrows point away from it) and at the bottom of `w2`. Tails are periodic, so kisses are counted
//! inside a window around the bodies and the window is widened by a common period until the count
//! stops moving; a count that keeps growing means infinitely many kisses.

use std::fmt;

use num_integer::Integer;

use crate::blossom::BlossomQuiver;
use crate::walk::{Letter, Walk};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KissCount {
    Finite(u64),
    Infinite,
}

impl KissCount {
    pub fn is_zero(self) -> bool {
        self == KissCount::Finite(0)
    }
    pub fn finite(self) -> Option<u64> {
        match self {
            KissCount::Finite(n) => Some(n),
            KissCount::Infinite => None,
        }
    }
}

impl std::ops::Add for KissCount {
    type Output = KissCount;
    fn add(self, o: KissCount) -> KissCount {
        match (self, o) {
            (KissCount::Finite(a), KissCount::Finite(b)) => KissCount::Finite(a + b),
            _ => KissCount::Infinite,
        }
    }
}

impl fmt::Display for KissCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KissCount::Finite(n) => write!(f, "{n}"),
            KissCount::Infinite => write!(f, "inf"),
        }
    }
}

pub const DEFAULT_UNROLL: usize = 2;

/// Unrolled letters of `w` on positions `lo..=hi` (clipped to the walk).
struct Window {
    lo: i64,
    letters: Vec<Letter>,
}

impl Window {
    fn new(w: &Walk, n: i64) -> Window {
        let lo = if w.has_left_tail() { -n } else { 0 };
        let nb = w.body_len() as i64;
        let hi = if w.has_right_tail() { nb - 1 + n } else { nb - 1 };
        Window { lo, letters: (lo..=hi).map(|i| w.letter_at(i)).collect() }
    }
    fn get(&self, i: i64) -> Option<Letter> {
        let k = i - self.lo;
        (k >= 0).then(|| self.letters.get(k as usize).copied()).flatten()
    }
    fn positions(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.lo + self.letters.len() as i64
    }
}

/// Kisses of `w1` on `w2` whose factor and both neighbours lie in the windows. `with_zero`
/// counts length-zero factors (done only for one of the two relative orientations).
fn count_aligned(bq: &BlossomQuiver, a: &Window, b: &Window, with_zero: bool) -> u64 {
    let mut count = 0;
    for p in a.positions() {
        let Some(x0) = a.get(p - 1) else { continue };
        if x0.is_pos() {
            continue;
        }
        for q in b.positions() {
            let Some(y0) = b.get(q - 1) else { continue };
            if !y0.is_pos() {
                continue;
            }
            let mut m = 0;
            loop {
                let (Some(x), Some(y)) = (a.get(p + m), b.get(q + m)) else { break };
                if x == y {
                    m += 1;
                    continue;
                }
                if x.is_pos() && !y.is_pos() && (m > 0 || (with_zero && bq.tail(x) == bq.tail(y))) {
                    count += 1;
                }
                break;
            }
        }
    }
    count
}

fn count_window(bq: &BlossomQuiver, w1: &Walk, w2: &Walk, n: i64) -> u64 {
    let a = Window::new(w1, n);
    let b = Window::new(w2, n);
    let br = Window::new(&w2.reversed(), n);
    count_aligned(bq, &a, &b, true) + count_aligned(bq, &a, &br, false)
}

/// Kisses found when every tail is unrolled `n` letters; exposed for stabilization checks.
pub fn kiss_count_window(bq: &BlossomQuiver, w1: &Walk, w2: &Walk, n: usize) -> u64 {
    count_window(bq, w1, w2, n as i64)
}

/// `kn(w1, w2)` with the default unrolling.
pub fn kiss_count(bq: &BlossomQuiver, w1: &Walk, w2: &Walk) -> KissCount {
    kiss_count_unrolled(bq, w1, w2, DEFAULT_UNROLL)
}

pub fn kiss_count_unrolled(bq: &BlossomQuiver, w1: &Walk, w2: &Walk, unroll: usize) -> KissCount {
    if w1.is_straight() || w2.is_straight() {
        return KissCount::Finite(0);
    }
    let tails = [&w1.left, &w1.right, &w2.left, &w2.right];
    if tails.iter().all(|t| t.is_empty()) {
        return KissCount::Finite(count_window(bq, w1, w2, 0));
    }
    let period = tails.iter().filter(|t| !t.is_empty()).fold(1usize, |m, t| m.lcm(&t.len())) as i64;
    let spread: i64 = tails.iter().map(|t| t.len() as i64).sum();
    let n0 = (w1.body_len() + w2.body_len()) as i64 + 2 * spread + (2 + unroll as i64) * period;
    let c0 = count_window(bq, w1, w2, n0);
    let c1 = count_window(bq, w1, w2, n0 + period);
    if c0 == c1 {
        KissCount::Finite(c0)
    } else {
        KissCount::Infinite
    }
}

pub fn is_self_kissing(bq: &BlossomQuiver, w: &Walk) -> bool {
    !kiss_count(bq, w, w).is_zero()
}

/// `kn(w1,w2) + kn(w2,w1)`.
pub fn mutual_kiss(bq: &BlossomQuiver, w1: &Walk, w2: &Walk) -> KissCount {
    kiss_count(bq, w1, w2) + kiss_count(bq, w2, w1)
}

pub fn compatible(bq: &BlossomQuiver, w1: &Walk, w2: &Walk) -> bool {
    mutual_kiss(bq, w1, w2).is_zero()
}

/// Total kissing number over a universe of walks (including `w` itself).
pub fn total_kissing_number<'a>(bq: &BlossomQuiver, w: &Walk, universe: impl IntoIterator<Item = &'a Walk>) -> KissCount {
    universe
        .into_iter()
        .fold(KissCount::Finite(0), |acc, u| acc + mutual_kiss(bq, w, u))
}

/// Self-kissing test on a partial word with optional left tail and a finite right end.
pub(crate) fn partial_self_kisses(bq: &BlossomQuiver, left: &[Letter], word: &[Letter]) -> bool {
    let w = Walk { left: left.to_vec(), body: word.to_vec(), right: vec![] };
    let n = if left.is_empty() { 0 } else { (word.len() + 2 * left.len()) as i64 };
    count_window(bq, &w, &w, n) > 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blossom::blossom;
    use crate::quiver::quiver;
    use crate::walk::{deep_walk, peak_walk};

    #[test]
    fn a2_peak_kisses_deep() {
        let b = blossom(&quiver(&["1", "2"], &[("a", "1", "2")], &[]).unwrap());
        for v in 0..2 {
            let p = peak_walk(&b, v);
            let d = deep_walk(&b, v);
            assert!(kiss_count(&b, &p, &d).finite().unwrap() >= 1);
            assert!(kiss_count(&b, &d, &p).is_zero());
        }
    }

    #[test]
    fn loop_peak_deep_infinite() {
        let b = blossom(&quiver(&["1"], &[("c", "1", "1")], &[]).unwrap());
        let p = peak_walk(&b, 0);
        let d = deep_walk(&b, 0);
        assert_eq!(kiss_count(&b, &p, &d), KissCount::Infinite);
        assert!(kiss_count(&b, &d, &p).is_zero());
        assert!(!is_self_kissing(&b, &p));
        let wind = Walk::parse(&b, "1+in1+ c- 1+out1+").unwrap();
        assert!(is_self_kissing(&b, &wind));
    }
}
