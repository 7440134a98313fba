//! Walks: maximal reduced relation-free words in the blossoming quiver, possibly with
//! periodic tails.

use std::fmt;

use crate::blossom::BlossomQuiver;
use crate::error::WalkError;

/// A signed arrow. The code is `2 * arrow + (1 if inverse)`, which also fixes the letter order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub u32);

impl Letter {
    pub fn pos(a: usize) -> Letter {
        Letter(2 * a as u32)
    }
    pub fn neg(a: usize) -> Letter {
        Letter(2 * a as u32 + 1)
    }
    pub fn arrow(self) -> usize {
        (self.0 / 2) as usize
    }
    pub fn is_pos(self) -> bool {
        self.0 % 2 == 0
    }
    pub fn inv(self) -> Letter {
        Letter(self.0 ^ 1)
    }
    pub fn sign(self) -> i8 {
        if self.is_pos() {
            1
        } else {
            -1
        }
    }
}

/// `∞left · body · right∞`; an empty tail means the word ends at a blossom vertex there.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    pub left: Vec<Letter>,
    pub body: Vec<Letter>,
    pub right: Vec<Letter>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkKind {
    Bending,
    FiniteStraight,
    InfiniteStraight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corner {
    Peak,
    Deep,
}

fn inv_rev(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|l| l.inv()).collect()
}

fn primitive_root(w: &[Letter]) -> Vec<Letter> {
    let n = w.len();
    for d in 1..=n {
        if n % d == 0 && (0..n).all(|i| w[i] == w[i % d]) {
            return w[..d].to_vec();
        }
    }
    w.to_vec()
}

fn min_rotation(w: &[Letter]) -> usize {
    (0..w.len())
        .min_by(|&i, &j| w[i..].iter().chain(&w[..i]).cmp(w[j..].iter().chain(&w[..j])))
        .unwrap_or(0)
}

impl Walk {
    pub fn finite(body: Vec<Letter>) -> Walk {
        Walk { left: vec![], body, right: vec![] }
    }

    pub fn body_len(&self) -> usize {
        self.body.len()
    }
    pub fn has_left_tail(&self) -> bool {
        !self.left.is_empty()
    }
    pub fn has_right_tail(&self) -> bool {
        !self.right.is_empty()
    }
    pub fn is_finite(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }

    /// Smallest valid position (None if unbounded).
    pub fn min_pos(&self) -> Option<i64> {
        if self.has_left_tail() {
            None
        } else {
            Some(0)
        }
    }
    /// Largest valid position (None if unbounded).
    pub fn max_pos(&self) -> Option<i64> {
        if self.has_right_tail() {
            None
        } else {
            Some(self.body.len() as i64 - 1)
        }
    }
    pub fn has_pos(&self, i: i64) -> bool {
        self.min_pos().map_or(true, |m| i >= m) && self.max_pos().map_or(true, |m| i <= m)
    }

    /// Letter at a position of the unrolled word; position 0 is the first body letter.
    pub fn letter_at(&self, i: i64) -> Letter {
        let nb = self.body.len() as i64;
        if i < 0 {
            let l = self.left.len() as i64;
            self.left[i.rem_euclid(l) as usize]
        } else if i < nb {
            self.body[i as usize]
        } else {
            let r = self.right.len() as i64;
            self.right[(i - nb).rem_euclid(r) as usize]
        }
    }
    pub fn try_letter(&self, i: i64) -> Option<Letter> {
        self.has_pos(i).then(|| self.letter_at(i))
    }

    /// The same walk read backwards; position `p` becomes `nb - 1 - p`.
    pub fn reversed(&self) -> Walk {
        Walk { left: inv_rev(&self.right), body: inv_rev(&self.body), right: inv_rev(&self.left) }
    }

    fn letters(&self) -> impl Iterator<Item = &Letter> {
        self.left.iter().chain(&self.body).chain(&self.right)
    }

    pub fn kind(&self) -> WalkKind {
        let mut it = self.letters();
        let first = it.next().map(|l| l.is_pos());
        if it.all(|l| Some(l.is_pos()) == first) {
            if self.is_finite() {
                WalkKind::FiniteStraight
            } else {
                WalkKind::InfiniteStraight
            }
        } else {
            WalkKind::Bending
        }
    }
    pub fn is_straight(&self) -> bool {
        self.kind() != WalkKind::Bending
    }
    pub fn is_bending(&self) -> bool {
        self.kind() == WalkKind::Bending
    }

    /// Corners: position `i` is the vertex between letters `i-1` and `i`. Tails are straight, so
    /// corners only sit in a bounded range.
    pub fn corners(&self, bq: &BlossomQuiver) -> Vec<(i64, usize, Corner)> {
        let nb = self.body.len() as i64;
        let mut out = vec![];
        for i in -1..=nb + 1 {
            let (Some(a), Some(b)) = (self.try_letter(i - 1), self.try_letter(i)) else { continue };
            let c = match (a.is_pos(), b.is_pos()) {
                (false, true) => Corner::Peak,
                (true, false) => Corner::Deep,
                _ => continue,
            };
            out.push((i, bq.tail(b), c));
        }
        out
    }

    /// Checks a raw word and returns its canonical representative.
    pub fn canonicalize(bq: &BlossomQuiver, raw: &Walk) -> Result<Walk, WalkError> {
        validate(bq, raw)?;
        let w = Walk {
            left: primitive_root(&raw.left),
            body: raw.body.clone(),
            right: primitive_root(&raw.right),
        };
        let a = normal_phase(w.clone());
        let b = normal_phase(w.reversed());
        Ok(if (&a.left, &a.body, &a.right) <= (&b.left, &b.body, &b.right) { a } else { b })
    }

    pub fn to_text(&self, bq: &BlossomQuiver) -> String {
        let q = bq.quiver();
        let word = |w: &[Letter]| {
            w.iter()
                .map(|l| format!("{}{}", q.arrow_id(l.arrow()), if l.is_pos() { '+' } else { '-' }))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut parts = vec![];
        if self.has_left_tail() {
            parts.push(format!("({})", word(&self.left)));
        }
        if !self.body.is_empty() {
            parts.push(word(&self.body));
        }
        if self.has_right_tail() {
            parts.push(format!("({})", word(&self.right)));
        }
        parts.join(" | ")
    }

    /// Parses `[(TAIL) |] LETTER* [| (TAIL)]` and canonicalizes.
    pub fn parse(bq: &BlossomQuiver, text: &str) -> Result<Walk, WalkError> {
        let q = bq.quiver();
        let letters = |s: &str| -> Result<Vec<Letter>, WalkError> {
            s.split_whitespace()
                .map(|tok| {
                    let (id, sign) = tok.split_at(tok.len() - tok.chars().last().map_or(0, |c| c.len_utf8()));
                    let a = q.arrow_index(id).ok_or_else(|| WalkError::UnknownArrow(id.to_string()))?;
                    match sign {
                        "+" => Ok(Letter::pos(a)),
                        "-" => Ok(Letter::neg(a)),
                        _ => Err(WalkError::Parse(format!("letter {tok:?} lacks a sign"))),
                    }
                })
                .collect()
        };
        let parts: Vec<&str> = text.split('|').map(str::trim).collect();
        let mut raw = Walk { left: vec![], body: vec![], right: vec![] };
        let mut rest = &parts[..];
        if let Some(first) = rest.first().and_then(|p| tail_text(p)) {
            if rest.len() > 1 {
                raw.left = letters(first)?;
                rest = &rest[1..];
            }
        }
        if let Some(last) = rest.last().and_then(|p| tail_text(p)) {
            raw.right = letters(last)?;
            rest = &rest[..rest.len() - 1];
        }
        match rest {
            [] => {}
            [b] => raw.body = letters(b)?,
            _ => return Err(WalkError::Parse(format!("unexpected layout {text:?}"))),
        }
        if raw.body.iter().chain(&raw.left).chain(&raw.right).next().is_none() {
            return Err(WalkError::Empty);
        }
        Walk::canonicalize(bq, &raw)
    }
}

fn tail_text(s: &str) -> Option<&str> {
    s.strip_prefix('(').and_then(|s| s.strip_suffix(')'))
}

fn text_of(bq: &BlossomQuiver, l: Letter) -> String {
    format!("{}{}", bq.quiver().arrow_id(l.arrow()), if l.is_pos() { '+' } else { '-' })
}

fn check_pair(bq: &BlossomQuiver, x: Letter, y: Letter) -> Result<(), WalkError> {
    if bq.head(x) != bq.tail(y) {
        return Err(WalkError::NotComposable(text_of(bq, x), text_of(bq, y)));
    }
    if x == y.inv() {
        return Err(WalkError::NotReduced(text_of(bq, x), text_of(bq, y)));
    }
    let q = bq.quiver();
    let hit = match (x.is_pos(), y.is_pos()) {
        (true, true) => q.is_relation(x.arrow(), y.arrow()),
        (false, false) => q.is_relation(y.arrow(), x.arrow()),
        _ => false,
    };
    if hit {
        return Err(WalkError::RelationHit(text_of(bq, x), text_of(bq, y)));
    }
    Ok(())
}

fn validate(bq: &BlossomQuiver, w: &Walk) -> Result<(), WalkError> {
    if w.left.is_empty() && w.body.is_empty() && w.right.is_empty() {
        return Err(WalkError::Empty);
    }
    let n = bq.quiver().n_arrows();
    if let Some(l) = w.letters().find(|l| l.arrow() >= n) {
        return Err(WalkError::UnknownArrow(format!("#{}", l.arrow())));
    }
    for t in [&w.left, &w.right] {
        if let Some(&f) = t.first() {
            if t.iter().any(|l| l.is_pos() != f.is_pos()) {
                return Err(WalkError::BadTail(t.iter().map(|&l| text_of(bq, l)).collect::<Vec<_>>().join(" ")));
            }
            check_pair(bq, *t.last().unwrap(), f)?;
        }
    }
    let seq: Vec<Letter> = w.letters().copied().collect();
    for p in seq.windows(2) {
        check_pair(bq, p[0], p[1])?;
    }
    if w.left.is_empty() && !bq.is_leaf(bq.tail(seq[0])) {
        return Err(WalkError::NotMaximal("left"));
    }
    if w.right.is_empty() && !bq.is_leaf(bq.head(*seq.last().unwrap())) {
        return Err(WalkError::NotMaximal("right"));
    }
    Ok(())
}

/// Shortest body, then tails rotated to their least phase.
fn normal_phase(mut w: Walk) -> Walk {
    if w.has_right_tail() {
        while w.body.last().is_some() && w.body.last() == w.right.last() {
            w.body.pop();
            w.right.rotate_right(1);
        }
    }
    if w.has_left_tail() {
        while !w.body.is_empty() && w.body.first() == w.left.first() {
            w.body.remove(0);
            w.left.rotate_left(1);
        }
    }
    if w.body.is_empty() && w.has_left_tail() && w.left == w.right {
        let k = min_rotation(&w.right);
        w.right.rotate_left(k);
        w.left = w.right.clone();
        return w;
    }
    if w.has_right_tail() {
        let k = min_rotation(&w.right);
        w.body.extend_from_slice(&w.right[..k]);
        w.right.rotate_left(k);
    }
    if w.has_left_tail() {
        let l = w.left.len();
        let k = (0..l)
            .min_by(|&i, &j| {
                let rot = |k: usize| w.left[l - k..].iter().chain(&w.left[..l - k]).copied().collect::<Vec<_>>();
                rot(i).cmp(&rot(j))
            })
            .unwrap();
        let mut body = w.left[l - k..].to_vec();
        body.extend_from_slice(&w.body);
        w.body = body;
        w.left.rotate_right(k);
    }
    w
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}{}", self.arrow(), if self.is_pos() { '+' } else { '-' })
    }
}

/// Straight ray starting with `l`: the letters up to a leaf, or a cycle returned as tail.
fn ray(bq: &BlossomQuiver, l: Letter) -> (Vec<Letter>, Vec<Letter>) {
    match bq.cycle_length(l) {
        Some(r) => {
            let mut c = vec![l];
            for _ in 1..r {
                c.push(bq.straight_next(*c.last().unwrap()).unwrap());
            }
            (vec![], c)
        }
        None => {
            let mut w = vec![l];
            while let Some(x) = bq.straight_next(*w.last().unwrap()) {
                w.push(x);
            }
            (w, vec![])
        }
    }
}

fn corner_walk(bq: &BlossomQuiver, first: Letter, second: Letter) -> Walk {
    // Reading `first.inv()` backwards then `second` forwards.
    let (lb, lt) = ray(bq, first);
    let (rb, rt) = ray(bq, second);
    let mut body = inv_rev(&lb);
    body.extend(rb);
    let raw = Walk { left: inv_rev(&lt), body, right: rt };
    Walk::canonicalize(bq, &raw).expect("corner walks are valid")
}

/// The walk whose only corner is a peak at the base vertex `a` (both arrows leave `a`).
pub fn peak_walk(bq: &BlossomQuiver, a: usize) -> Walk {
    let v = bq.full_vertex(a);
    let outs = bq.quiver().out_arrows(v);
    corner_walk(bq, Letter::pos(outs[0]), Letter::pos(outs[1]))
}

/// The walk whose only corner is a deep at the base vertex `a` (both arrows enter `a`).
pub fn deep_walk(bq: &BlossomQuiver, a: usize) -> Walk {
    let v = bq.full_vertex(a);
    let ins = bq.quiver().in_arrows(v);
    corner_walk(bq, Letter::neg(ins[0]), Letter::neg(ins[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blossom::blossom;
    use crate::quiver::quiver;

    fn a2() -> BlossomQuiver {
        blossom(&quiver(&["1", "2"], &[("a", "1", "2")], &[]).unwrap())
    }
    fn loop1() -> BlossomQuiver {
        blossom(&quiver(&["1"], &[("c", "1", "1")], &[]).unwrap())
    }

    #[test]
    fn straight_a2_walk_either_direction() {
        let b = a2();
        let w1 = Walk::parse(&b, "1+in2+ a+ 2+out2+").unwrap();
        let w2 = Walk::parse(&b, "2+out2- a- 1+in2-").unwrap();
        assert_eq!(w1, w2);
        assert_eq!(w1.kind(), WalkKind::FiniteStraight);
    }

    #[test]
    fn relation_and_reduction_errors() {
        let b = a2();
        assert!(matches!(Walk::parse(&b, "1+in1+ a+ 2+out2+"), Err(WalkError::RelationHit(..))));
        assert!(matches!(Walk::parse(&b, "1+in2+ a+ a- 1+in2-"), Err(WalkError::NotReduced(..))));
        assert!(matches!(Walk::parse(&b, "a+ 2+out2+"), Err(WalkError::NotMaximal("left"))));
    }

    #[test]
    fn loop_spiral_canonical() {
        let b = loop1();
        let w = Walk::parse(&b, "1+in1+ | (c-)").unwrap();
        assert_eq!(w.to_text(&b), "1+in1+ | (c-)");
        let again = Walk::parse(&b, &w.to_text(&b)).unwrap();
        assert_eq!(w, again);
        let long = Walk::parse(&b, "1+in1+ c- c- | (c-)").unwrap();
        assert_eq!(long, w);
        let bi = Walk::parse(&b, "(c+) | (c+)").unwrap();
        assert_eq!(bi.kind(), WalkKind::InfiniteStraight);
        assert_eq!(bi, Walk::parse(&b, "(c-) | c- | (c-)").unwrap());
    }

    #[test]
    fn loop_peak_and_deep() {
        let b = loop1();
        let p = peak_walk(&b, 0);
        let d = deep_walk(&b, 0);
        assert_eq!(p.corners(&b).len(), 1);
        assert_eq!(p.corners(&b)[0].2, Corner::Peak);
        assert_eq!(d.corners(&b)[0].2, Corner::Deep);
        assert_eq!(p.to_text(&b), "1+out1- | (c+)");
    }

    #[test]
    fn a2_corners() {
        let b = a2();
        let p = peak_walk(&b, 0);
        let cs = p.corners(&b);
        assert_eq!(cs.len(), 1);
        assert_eq!(b.base_vertex(cs[0].1), Some(0));
        let d = deep_walk(&b, 1);
        let cs = d.corners(&b);
        assert_eq!((cs.len(), cs[0].2, b.base_vertex(cs[0].1)), (1, Corner::Deep, Some(1)));
    }
}
