//! Facets, distinguished arrows and flips.

use std::cmp::Ordering;

use crate::blossom::BlossomQuiver;
use crate::error::ComplexError;
use crate::order::{countercurrent_cmp, occurrences, MarkedWalk};
use crate::walk::{Letter, Walk};

/// A set of walks, kept sorted so that equal facets compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    walks: Vec<Walk>,
}

impl Facet {
    pub fn new(walks: impl IntoIterator<Item = Walk>) -> Facet {
        let mut walks: Vec<Walk> = walks.into_iter().collect();
        walks.sort();
        walks.dedup();
        Facet { walks }
    }
    pub fn walks(&self) -> &[Walk] {
        &self.walks
    }
    pub fn len(&self) -> usize {
        self.walks.len()
    }
    pub fn is_empty(&self) -> bool {
        self.walks.is_empty()
    }
    pub fn contains(&self, w: &Walk) -> bool {
        self.walks.binary_search(w).is_ok()
    }
    pub fn index_of(&self, w: &Walk) -> Option<usize> {
        self.walks.binary_search(w).ok()
    }
    pub fn bending(&self) -> impl Iterator<Item = &Walk> {
        self.walks.iter().filter(|w| w.is_bending())
    }
    pub fn without(&self, w: &Walk) -> Facet {
        Facet { walks: self.walks.iter().filter(|x| *x != w).cloned().collect() }
    }
    pub fn texts(&self, bq: &BlossomQuiver) -> Vec<String> {
        self.walks.iter().map(|w| w.to_text(bq)).collect()
    }
}

/// `≺_alpha`-maximum among the occurrences of `alpha` on `walks`, as (walk index, position).
pub fn distinguished_walk(walks: &[Walk], alpha: usize) -> Result<Option<(usize, i64)>, ComplexError> {
    let mut best: Option<(usize, i64)> = None;
    for (k, w) in walks.iter().enumerate() {
        for p in occurrences(w, alpha) {
            best = Some(match best {
                None => (k, p),
                Some((bk, bp)) => {
                    let m = MarkedWalk { walk: w, pos: p };
                    let n = MarkedWalk { walk: &walks[bk], pos: bp };
                    if countercurrent_cmp(m, n, alpha)? == Ordering::Greater {
                        (k, p)
                    } else {
                        (bk, bp)
                    }
                }
            });
        }
    }
    Ok(best)
}

/// For every arrow of the blossoming quiver, the distinguished marked walk of `f`.
pub fn distinguished_table(bq: &BlossomQuiver, f: &Facet) -> Result<Vec<Option<(usize, i64)>>, ComplexError> {
    (0..bq.quiver().n_arrows()).map(|a| distinguished_walk(f.walks(), a)).collect()
}

/// Positions on `w` of its distinguished arrows in `f`, in increasing order.
pub fn distinguished_positions(bq: &BlossomQuiver, f: &Facet, w: &Walk) -> Result<Vec<i64>, ComplexError> {
    let k = f.index_of(w).ok_or_else(|| ComplexError::NotMember(w.to_text(bq)))?;
    let mut out: Vec<i64> = distinguished_table(bq, f)?
        .into_iter()
        .flatten()
        .filter(|&(j, _)| j == k)
        .map(|(_, p)| p)
        .collect();
    out.sort();
    Ok(out)
}

/// Arrow ids of the distinguished arrows of `w` in `f`.
pub fn distinguished_arrows(bq: &BlossomQuiver, f: &Facet, w: &Walk) -> Result<Vec<usize>, ComplexError> {
    Ok(distinguished_positions(bq, f, w)?.into_iter().map(|p| w.letter_at(p).arrow()).collect())
}

/// The factor strictly between the two distinguished arrows of a bending walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishedString {
    /// Positions of the two distinguished arrows.
    pub start: i64,
    pub end: i64,
    pub letters: Vec<Letter>,
    /// Whether the factor is on top of the walk (the distinguished arrows point away from it).
    pub top: bool,
}

pub fn distinguished_string(bq: &BlossomQuiver, f: &Facet, w: &Walk) -> Result<DistinguishedString, ComplexError> {
    if !w.is_bending() {
        return Err(ComplexError::NotBending(w.to_text(bq)));
    }
    let pos = distinguished_positions(bq, f, w)?;
    let [i, j] = pos[..] else {
        return Err(ComplexError::NotMaximalFacet(format!(
            "{} has {} distinguished arrows",
            w.to_text(bq),
            pos.len()
        )));
    };
    let (a, b) = (w.letter_at(i), w.letter_at(j));
    if a.is_pos() == b.is_pos() {
        return Err(ComplexError::NotMaximalFacet(format!("distinguished arrows of {} point the same way", w.to_text(bq))));
    }
    Ok(DistinguishedString { start: i, end: j, letters: (i + 1..j).map(|k| w.letter_at(k)).collect(), top: !a.is_pos() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flip {
    pub facet: Facet,
    pub old: Walk,
    pub new: Walk,
    /// The exchanged factor is on top of the old walk.
    pub increasing: bool,
}

/// Letters of `w` up to position `k` inclusive, as (left tail, body).
fn prefix(w: &Walk, k: i64) -> (Vec<Letter>, Vec<Letter>) {
    if w.has_left_tail() && k < 0 {
        let l = w.left.len() as i64;
        (((k - l + 1)..=k).map(|i| w.letter_at(i)).collect(), vec![])
    } else {
        let lo = w.min_pos().unwrap_or(0);
        (w.left.clone(), (lo..=k).map(|i| w.letter_at(i)).collect())
    }
}

/// Letters of `w` from position `k` on, as (body, right tail).
fn suffix(w: &Walk, k: i64) -> (Vec<Letter>, Vec<Letter>) {
    let nb = w.body_len() as i64;
    if w.has_right_tail() && k >= nb {
        let r = w.right.len() as i64;
        (vec![], (k..k + r).map(|i| w.letter_at(i)).collect())
    } else {
        ((k..nb).map(|i| w.letter_at(i)).collect(), w.right.clone())
    }
}

/// Orients the marked walk so that the mark reads `letter`.
fn orient(w: &Walk, p: i64, letter: Letter) -> Option<(Walk, i64)> {
    if w.letter_at(p) == letter {
        Some((w.clone(), p))
    } else if w.letter_at(p) == letter.inv() {
        Some((w.reversed(), w.body_len() as i64 - 1 - p))
    } else {
        None
    }
}

/// Exchanges the bending walk `w` of the maximal facet `f`.
pub fn flip(bq: &BlossomQuiver, f: &Facet, w: &Walk) -> Result<Flip, ComplexError> {
    let ds = distinguished_string(bq, f, w)?;
    let (i, j) = (ds.start, ds.end);
    let fail = |m: &str| ComplexError::FlipFailed(format!("{m} while flipping {}", w.to_text(bq)));
    let first = w.letter_at(i + 1);
    let last = w.letter_at(j - 1);
    let a_prime = [bq.straight_prev(first), bq.bend_prev(first)]
        .into_iter()
        .flatten()
        .find(|&x| x != w.letter_at(i))
        .ok_or_else(|| fail("no companion arrow"))?;
    let b_prime = [bq.straight_next(last), bq.bend_next(last)]
        .into_iter()
        .flatten()
        .find(|&x| x != w.letter_at(j))
        .ok_or_else(|| fail("no companion arrow"))?;
    let rest = f.without(w);
    let (mk, mp) = distinguished_walk(rest.walks(), a_prime.arrow())?.ok_or_else(|| fail("empty arrow class"))?;
    let (nk, np) = distinguished_walk(rest.walks(), b_prime.arrow())?.ok_or_else(|| fail("empty arrow class"))?;
    let (mu, mp) = orient(&rest.walks()[mk], mp, a_prime).ok_or_else(|| fail("bad mark"))?;
    let (nu, np) = orient(&rest.walks()[nk], np, b_prime).ok_or_else(|| fail("bad mark"))?;
    let s = ds.letters.len() as i64;
    let mu_ok = (0..s).all(|t| mu.try_letter(mp + 1 + t) == Some(ds.letters[t as usize]))
        && mu.try_letter(mp + 1 + s) == Some(w.letter_at(j));
    let nu_ok = (0..s).all(|t| nu.try_letter(np - s + t) == Some(ds.letters[t as usize]))
        && nu.try_letter(np - s - 1) == Some(w.letter_at(i));
    if !mu_ok || !nu_ok {
        return Err(fail("distinguished walks do not follow the distinguished string"));
    }
    let (left, mut body) = prefix(&mu, mp);
    body.extend_from_slice(&ds.letters);
    let (tail_body, right) = suffix(&nu, np);
    body.extend(tail_body);
    let new = Walk::canonicalize(bq, &Walk { left, body, right }).map_err(|e| fail(&e.to_string()))?;
    let facet = Facet::new(rest.walks().iter().cloned().chain(std::iter::once(new.clone())));
    Ok(Flip { facet, old: w.clone(), new, increasing: ds.top })
}
