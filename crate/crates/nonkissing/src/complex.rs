//! The non-kissing complex: flip graph, clique oracle and structural checks.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::blossom::BlossomQuiver;
use crate::enumerate::enumerate_nonkissing_walks;
use crate::error::ComplexError;
use crate::facet::{distinguished_positions, flip, Facet};
use crate::kiss::compatible;
use crate::walk::{peak_walk, Walk, WalkKind};

/// Straight walks: one per blossom-to-blossom ray and one per straight cycle.
pub fn straight_walks(bq: &BlossomQuiver) -> Vec<Walk> {
    let mut out = BTreeSet::new();
    for v in bq.blossom_vertices() {
        let mut word = vec![bq.leaf_start(v)];
        while let Some(x) = bq.straight_next(*word.last().unwrap()) {
            word.push(x);
        }
        out.insert(Walk::canonicalize(bq, &Walk::finite(word)).expect("straight rays are walks"));
    }
    for c in bq.straight_cycles() {
        out.insert(Walk::canonicalize(bq, &Walk { left: c.clone(), body: vec![], right: c }).expect("cycles are walks"));
    }
    out.into_iter().collect()
}

pub fn peak_facet(bq: &BlossomQuiver) -> Facet {
    Facet::new((0..bq.base().n_vertices()).map(|a| peak_walk(bq, a)).chain(straight_walks(bq)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipEdge {
    pub from: usize,
    pub to: usize,
    pub old: Walk,
    pub new: Walk,
    pub increasing: bool,
}

#[derive(Debug, Clone)]
pub struct FlipGraph {
    pub facets: Vec<Facet>,
    pub edges: Vec<FlipEdge>,
    /// The frontier was exhausted within the bound.
    pub closed: bool,
}

impl FlipGraph {
    pub fn index_of(&self, f: &Facet) -> Option<usize> {
        self.facets.iter().position(|g| g == f)
    }

    /// Facets with straight walks removed.
    pub fn reduced_facets(&self) -> Vec<Vec<&Walk>> {
        self.facets.iter().map(|f| f.bending().collect()).collect()
    }

    pub fn to_dot(&self, bq: &BlossomQuiver) -> String {
        let mut s = String::from("digraph flips {\n");
        for i in 0..self.facets.len() {
            s.push_str(&format!("  f{i} [label=\"{i}\"];\n"));
        }
        for e in self.edges.iter().filter(|e| e.increasing) {
            s.push_str(&format!(
                "  f{} -> f{} [label=\"{} / {}\"];\n",
                e.from,
                e.to,
                e.old.to_text(bq).replace('"', "'"),
                e.new.to_text(bq).replace('"', "'")
            ));
        }
        s.push_str("}\n");
        s
    }
}

/// Breadth-first closure of flips from the peak facet.
pub fn enumerate_facets(bq: &BlossomQuiver, max_facets: usize) -> Result<FlipGraph, ComplexError> {
    let start = peak_facet(bq);
    let mut index: BTreeMap<Facet, usize> = BTreeMap::new();
    let mut facets = vec![start.clone()];
    index.insert(start, 0);
    let mut queue = VecDeque::from([0usize]);
    let mut edges = vec![];
    let mut closed = true;
    while let Some(k) = queue.pop_front() {
        let f = facets[k].clone();
        let mut bending: Vec<&Walk> = f.bending().collect();
        bending.sort_by_cached_key(|w| w.to_text(bq));
        for w in bending {
            let fl = flip(bq, &f, w)?;
            let to = match index.get(&fl.facet) {
                Some(&t) => t,
                None => {
                    if facets.len() >= max_facets.max(1) {
                        closed = false;
                        continue;
                    }
                    let t = facets.len();
                    index.insert(fl.facet.clone(), t);
                    facets.push(fl.facet.clone());
                    queue.push_back(t);
                    t
                }
            };
            edges.push(FlipEdge { from: k, to, old: fl.old, new: fl.new, increasing: fl.increasing });
        }
    }
    Ok(FlipGraph { facets, edges, closed })
}

/// Maximal cliques of the compatibility graph on non-self-kissing walks.
pub fn brute_force_facets(bq: &BlossomQuiver, body_bound: usize) -> Result<Vec<Facet>, ComplexError> {
    let set = enumerate_nonkissing_walks(bq, body_bound);
    if !set.complete {
        return Err(ComplexError::IncompleteUniverse);
    }
    Ok(maximal_facets(bq, &set.walks))
}

/// Maximal pairwise compatible subsets of `walks` (Bron–Kerbosch with pivoting).
pub fn maximal_facets(bq: &BlossomQuiver, walks: &[Walk]) -> Vec<Facet> {
    let n = walks.len();
    let adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && compatible(bq, &walks[i], &walks[j])).collect())
        .collect();
    let mut out = vec![];
    let mut stack = vec![(vec![], (0..n).collect::<BTreeSet<usize>>(), BTreeSet::new())];
    while let Some((r, p, mut x)) = stack.pop() {
        if p.is_empty() {
            if x.is_empty() {
                out.push(Facet::new(r.iter().map(|&i: &usize| walks[i].clone())));
            }
            continue;
        }
        let pivot = *p.iter().chain(x.iter()).max_by_key(|&&u| adj[u].intersection(&p).count()).unwrap();
        let mut p = p;
        let cands: Vec<usize> = p.difference(&adj[pivot]).copied().collect();
        for v in cands {
            let mut r2 = r.clone();
            r2.push(v);
            stack.push((r2, p.intersection(&adj[v]).copied().collect(), x.intersection(&adj[v]).copied().collect()));
            p.remove(&v);
            x.insert(v);
        }
    }
    out.sort();
    out
}

/// A named list of violations; empty means the property holds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
    pub(crate) fn fail(&mut self, s: String) {
        self.violations.push(s);
    }
}

/// Walk-type census of a facet: (bending, finite straight, infinite straight).
pub fn census(f: &Facet) -> (usize, usize, usize) {
    let mut c = (0, 0, 0);
    for w in f.walks() {
        match w.kind() {
            WalkKind::Bending => c.0 += 1,
            WalkKind::FiniteStraight => c.1 += 1,
            WalkKind::InfiniteStraight => c.2 += 1,
        }
    }
    c
}

pub fn verify_purity(bq: &BlossomQuiver, facets: &[Facet]) -> Report {
    let q = bq.base();
    let (n0, n1) = (q.n_vertices() as i64, q.n_arrows() as i64);
    let p = bq.count_straight_cycles() as i64;
    let mut rep = Report::default();
    for (k, f) in facets.iter().enumerate() {
        rep.checked += 1;
        let (b, s, _) = census(f);
        if b as i64 != n0 || s as i64 != 2 * n0 - n1 || f.len() as i64 != 3 * n0 - n1 + p {
            rep.fail(format!("facet {k}: {b} bending, {s} finite straight, {} walks", f.len()));
        }
        if f.len() > bq.quiver().n_arrows() + p as usize {
            rep.fail(format!("facet {k} exceeds the size bound"));
        }
    }
    rep
}

/// Every bending walk flips to one other facet, flipping back restores the facet and walk with
/// the opposite direction, and flips inside the graph match its edges.
pub fn verify_thinness(bq: &BlossomQuiver, g: &FlipGraph) -> Report {
    let mut rep = Report::default();
    for (k, f) in g.facets.iter().enumerate() {
        for w in f.bending() {
            rep.checked += 1;
            let fl = match flip(bq, f, w) {
                Ok(fl) => fl,
                Err(err) => {
                    rep.fail(format!("facet {k}: {err}"));
                    continue;
                }
            };
            if fl.facet == *f {
                rep.fail(format!("facet {k}: {} flips to itself", w.to_text(bq)));
            }
            match flip(bq, &fl.facet, &fl.new) {
                Ok(back) if back.facet == *f && back.new == *w && back.increasing != fl.increasing => {}
                Ok(_) => rep.fail(format!("facet {k}: flip of {} does not invert", w.to_text(bq))),
                Err(err) => rep.fail(format!("facet {k}: {err}")),
            }
            let out: Vec<&FlipEdge> = g.edges.iter().filter(|e| e.from == k && &e.old == w).collect();
            let target = g.index_of(&fl.facet);
            let consistent = match (out.as_slice(), target) {
                ([e], Some(t)) => e.to == t && e.new == fl.new,
                ([], None) => !g.closed,
                _ => false,
            };
            if !consistent {
                rep.fail(format!("facet {k}: graph edges for {} disagree with the flip", w.to_text(bq)));
            }
        }
    }
    rep
}

/// Removing a bending walk leaves exactly two completions inside `universe`.
pub fn verify_two_completions(bq: &BlossomQuiver, facets: &[Facet], universe: &[Walk]) -> Report {
    let mut rep = Report::default();
    for (k, f) in facets.iter().enumerate() {
        for w in f.bending() {
            rep.checked += 1;
            let rest = f.without(w);
            let n = universe
                .iter()
                .filter(|u| !rest.contains(u) && rest.walks().iter().all(|x| compatible(bq, u, x)))
                .count();
            if n != 2 {
                rep.fail(format!("facet {k} minus {} has {n} completions", w.to_text(bq)));
            }
        }
    }
    rep
}

/// 2 / 1 / 0 distinguished arrows on bending / finite straight / infinite straight walks.
pub fn verify_distinguished(bq: &BlossomQuiver, facets: &[Facet]) -> Report {
    let mut rep = Report::default();
    for (k, f) in facets.iter().enumerate() {
        for w in f.walks() {
            rep.checked += 1;
            let want = match w.kind() {
                WalkKind::Bending => 2,
                WalkKind::FiniteStraight => 1,
                WalkKind::InfiniteStraight => 0,
            };
            match distinguished_positions(bq, f, w) {
                Ok(p) if p.len() == want => {}
                Ok(p) => rep.fail(format!("facet {k}: {} has {} distinguished arrows", w.to_text(bq), p.len())),
                Err(e) => rep.fail(format!("facet {k}: {e}")),
            }
        }
    }
    rep
}

/// Every facet holds, for each straight cycle, a walk other than the cycle itself ending in it.
pub fn walks_through_cycles_check(bq: &BlossomQuiver, facets: &[Facet]) -> Report {
    let mut rep = Report::default();
    let cycles = bq.straight_cycles();
    for (k, f) in facets.iter().enumerate() {
        for c in &cycles {
            rep.checked += 1;
            let arrows: BTreeSet<usize> = c.iter().map(|l| l.arrow()).collect();
            let on_cycle = |t: &[crate::walk::Letter]| !t.is_empty() && t.iter().all(|l| arrows.contains(&l.arrow()));
            let hit = f.walks().iter().any(|w| w.kind() != WalkKind::InfiniteStraight && (on_cycle(&w.left) || on_cycle(&w.right)));
            if !hit {
                rep.fail(format!("facet {k} has no walk spiralling into a cycle of length {}", c.len()));
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blossom::blossom;
    use crate::quiver::quiver;

    #[test]
    fn a2_pentagon() {
        let b = blossom(&quiver(&["1", "2"], &[("a", "1", "2")], &[]).unwrap());
        let g = enumerate_facets(&b, 100).unwrap();
        assert!(g.closed);
        assert_eq!(g.facets.len(), 5);
        assert_eq!(g.edges.len(), 10);
        assert!(verify_thinness(&b, &g).ok());
        let mut bf = brute_force_facets(&b, 20).unwrap();
        let mut ours = g.facets.clone();
        bf.sort();
        ours.sort();
        assert_eq!(bf, ours);
    }

    #[test]
    fn loop_two_facets() {
        let b = blossom(&quiver(&["1"], &[("c", "1", "1")], &[]).unwrap());
        let g = enumerate_facets(&b, 100).unwrap();
        assert!(g.closed);
        assert_eq!(g.facets.len(), 2);
        assert!(g.facets.iter().all(|f| f.len() == 3));
        assert!(walks_through_cycles_check(&b, &g.facets).ok());
    }
}
