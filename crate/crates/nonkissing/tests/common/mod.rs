//! Brute-force oracles shared by the integration tests. Nothing here calls the kissing or
//! clique code of the library.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use nonkissing::facet::Facet;
use nonkissing::quiver::{BoundQuiver, RawArrow, RawQuiver};
use nonkissing::{BlossomQuiver, Letter, Walk};
use rand::seq::SliceRandom;
use rand::Rng;

/// Letters of `w` on `lo..=hi`, clipped to the walk.
fn window(w: &Walk, n: i64) -> Vec<Letter> {
    let lo = if w.left.is_empty() { 0 } else { -n };
    let hi = w.body.len() as i64 - 1 + if w.right.is_empty() { 0 } else { n };
    (lo..=hi).map(|i| w.letter_at(i)).collect()
}

/// Occurrences `(i, j, letters)` of factors `x_i .. x_{j-1}` whose outer letters both exist
/// and point away from the factor (`top`) or towards it.
fn occurrences(bq: &BlossomQuiver, word: &[Letter], top: bool) -> Vec<(usize, Vec<Letter>)> {
    let mut out = vec![];
    for i in 1..word.len() {
        for j in i..word.len() {
            let (l, r) = (word[i - 1], word[j]);
            let away = !l.is_pos() && r.is_pos();
            let towards = l.is_pos() && !r.is_pos();
            if (top && away) || (!top && towards) {
                out.push((bq.head(l), word[i..j].to_vec()));
            }
        }
    }
    out
}

/// Factor up to reading direction; empty factors are told apart by their vertex.
fn key(v: usize, f: &[Letter]) -> (usize, Vec<Letter>) {
    if f.is_empty() {
        return (v, vec![]);
    }
    let rev: Vec<Letter> = f.iter().rev().map(|l| l.inv()).collect();
    (usize::MAX, rev.min(f.to_vec()))
}

/// Kisses of `w1` (on top) on `w2` (at the bottom), tails unrolled `n` letters.
pub fn naive_kiss(bq: &BlossomQuiver, w1: &Walk, w2: &Walk, n: i64) -> u64 {
    let mut bottoms: HashMap<(usize, Vec<Letter>), u64> = HashMap::new();
    for (v, g) in occurrences(bq, &window(w2, n), false) {
        *bottoms.entry(key(v, &g)).or_default() += 1;
    }
    occurrences(bq, &window(w1, n), true).iter().map(|(v, f)| bottoms.get(&key(*v, f)).copied().unwrap_or(0)).sum()
}

/// `kn(w1, w2)`, `None` when the count keeps growing with the window.
pub fn oracle_kn(bq: &BlossomQuiver, w1: &Walk, w2: &Walk) -> Option<u64> {
    let tails = [&w1.left, &w1.right, &w2.left, &w2.right];
    if tails.iter().all(|t| t.is_empty()) {
        return Some(naive_kiss(bq, w1, w2, 0));
    }
    let n = (w1.body.len() + w2.body.len() + 2 * tails.iter().map(|t| t.len()).sum::<usize>()) as i64 + 6;
    let (a, b) = (naive_kiss(bq, w1, w2, n), naive_kiss(bq, w1, w2, 2 * n));
    (a == b).then_some(a)
}

pub fn oracle_mutual(bq: &BlossomQuiver, w1: &Walk, w2: &Walk) -> Option<u64> {
    Some(oracle_kn(bq, w1, w2)? + oracle_kn(bq, w2, w1)?)
}

/// Maximal cliques of pairwise non-kissing, non-self-kissing walks.
pub fn clique_facets(bq: &BlossomQuiver, universe: &[Walk]) -> Vec<Facet> {
    let walks: Vec<&Walk> = universe.iter().filter(|w| oracle_kn(bq, w, w) == Some(0)).collect();
    let n = walks.len();
    let ok: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| oracle_mutual(bq, walks[i], walks[j]) == Some(0)).collect()).collect();
    let mut out = BTreeSet::new();
    fn grow(ok: &[Vec<bool>], cur: &mut Vec<usize>, from: usize, out: &mut Vec<Vec<usize>>) {
        let n = ok.len();
        let extendable = (0..n).any(|k| !cur.contains(&k) && cur.iter().all(|&c| ok[c][k]));
        if !extendable {
            out.push(cur.clone());
            return;
        }
        for k in from..n {
            if cur.iter().all(|&c| ok[c][k]) {
                cur.push(k);
                grow(ok, cur, k + 1, out);
                cur.pop();
            }
        }
    }
    let mut cliques = vec![];
    grow(&ok, &mut vec![], 0, &mut cliques);
    for c in cliques {
        out.insert(Facet::new(c.into_iter().map(|k| walks[k].clone())));
    }
    out.into_iter().collect()
}

/// A random locally gentle quiver on `1..=n` vertices: arrows respect the degree bounds and the
/// relations at each vertex are a random admissible pairing of in- and out-arrows.
pub fn random_quiver(rng: &mut impl Rng, max_vertices: usize) -> BoundQuiver {
    loop {
        let n = rng.gen_range(1..=max_vertices);
        let mut ins = vec![0; n];
        let mut outs = vec![0; n];
        let mut arrows = vec![];
        for _ in 0..rng.gen_range(0..=2 * n) {
            let (s, t) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if outs[s] < 2 && ins[t] < 2 {
                outs[s] += 1;
                ins[t] += 1;
                arrows.push((s, t));
            }
        }
        let mut relations = vec![];
        for v in 0..n {
            let inc: Vec<usize> = (0..arrows.len()).filter(|&a| arrows[a].1 == v).collect();
            let out: Vec<usize> = (0..arrows.len()).filter(|&a| arrows[a].0 == v).collect();
            let pairs: Vec<(usize, usize)> = inc.iter().flat_map(|&a| out.iter().map(move |&b| (a, b))).collect();
            let admissible = |rel: &[(usize, usize)]| {
                let free: Vec<(usize, usize)> = pairs.iter().copied().filter(|p| !rel.contains(p)).collect();
                [rel, &free[..]].iter().all(|set| {
                    set.iter().all(|&(a, b)| set.iter().filter(|p| p.0 == a).count() == 1 && set.iter().filter(|p| p.1 == b).count() == 1)
                })
            };
            let choices: Vec<Vec<(usize, usize)>> = (0..1u32 << pairs.len())
                .map(|m| pairs.iter().enumerate().filter(|(k, _)| m >> k & 1 == 1).map(|(_, p)| *p).collect())
                .filter(|r: &Vec<(usize, usize)>| admissible(r))
                .collect();
            relations.extend(choices.choose(rng).expect("some pairing is admissible").clone());
        }
        let raw = RawQuiver {
            vertices: (0..n).map(|v| format!("v{v}")).collect(),
            arrows: arrows.iter().enumerate().map(|(k, &(s, t))| RawArrow { id: format!("x{k}"), src: format!("v{s}"), tgt: format!("v{t}") }).collect(),
            relations: relations.iter().map(|&(a, b)| (format!("x{a}"), format!("x{b}"))).collect(),
        };
        if let Ok(q) = BoundQuiver::from_raw(&raw) {
            return q;
        }
    }
}

/// Euler characteristic of the map, counted directly: points with darts, edges, faces.
pub fn map_euler(s: &nonkissing::surface::SurfaceModel) -> i64 {
    let n = s.n_darts();
    let points: BTreeSet<usize> = (0..n).map(|d| s.tail(d)).collect();
    let mut seen = vec![false; n];
    let mut faces = 0;
    for d in 0..n {
        if !seen[d] {
            faces += 1;
            let mut x = d;
            while !seen[x] {
                seen[x] = true;
                x = s.next(x);
            }
        }
    }
    points.len() as i64 - (n / 2) as i64 + faces
}
