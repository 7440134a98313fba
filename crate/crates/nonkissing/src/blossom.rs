//! Completion of a bound quiver to its blossoming quiver.

use std::collections::HashSet;

use crate::error::QuiverError;
use crate::quiver::{BoundQuiver, RawArrow, RawQuiver};
use crate::walk::Letter;

const NS: usize = 0;
const NP: usize = 2;
const OI: usize = 4;
const OO: usize = 5;

/// A complete quiver (every vertex of degree 1 or 4) together with its pruned core.
#[derive(Debug, Clone)]
pub struct BlossomQuiver {
    base: BoundQuiver,
    full: BoundQuiver,
    leaf: Vec<bool>,
    blossom_arrow: Vec<bool>,
    base_vertex: Vec<Option<usize>>,
    nbr: Vec<[Option<usize>; 6]>,
}

fn fresh(want: String, used: &mut HashSet<String>) -> String {
    let mut id = want;
    while used.contains(&id) {
        id.push('\'');
    }
    used.insert(id.clone());
    id
}

/// Adds blossom arrows so every original vertex has two incoming and two outgoing arrows.
pub fn blossom(q: &BoundQuiver) -> BlossomQuiver {
    let mut raw = q.to_raw();
    let mut used: HashSet<String> = raw.vertices.iter().cloned().collect();
    used.extend(raw.arrows.iter().map(|a| a.id.clone()));

    for v in 0..q.n_vertices() {
        let vid = q.vertex_id(v).to_string();
        let mut ins: Vec<String> = q.in_arrows(v).iter().map(|&a| q.arrow_id(a).to_string()).collect();
        let mut outs: Vec<String> = q.out_arrows(v).iter().map(|&a| q.arrow_id(a).to_string()).collect();
        let (old_in, old_out) = (ins.len(), outs.len());
        for k in old_in..2 {
            let id = fresh(format!("{vid}+in{}", k - old_in + 1), &mut used);
            raw.vertices.push(id.clone());
            raw.arrows.push(RawArrow { id: id.clone(), src: id.clone(), tgt: vid.clone() });
            ins.push(id);
        }
        for k in old_out..2 {
            let id = fresh(format!("{vid}+out{}", k - old_out + 1), &mut used);
            raw.vertices.push(id.clone());
            raw.arrows.push(RawArrow { id: id.clone(), src: vid.clone(), tgt: id.clone() });
            outs.push(id);
        }
        let related = |i: usize, o: usize| q.is_relation(q.in_arrows(v)[i], q.out_arrows(v)[o]);
        let consistent = |m: [(usize, usize); 2]| {
            for i in 0..old_in {
                for o in 0..old_out {
                    if related(i, o) != m.contains(&(i, o)) {
                        return false;
                    }
                }
            }
            true
        };
        let matching = [[(0, 0), (1, 1)], [(0, 1), (1, 0)]]
            .into_iter()
            .find(|&m| consistent(m))
            .expect("locally gentle vertex admits a completion");
        for (i, o) in matching {
            if i >= old_in || o >= old_out {
                raw.relations.push((ins[i].clone(), outs[o].clone()));
            }
        }
    }
    let full = BoundQuiver::from_raw(&raw).expect("blossoming preserves local gentleness");
    BlossomQuiver::assemble(q.clone(), full, &used_leaves(q, &raw))
}

fn used_leaves(q: &BoundQuiver, raw: &RawQuiver) -> HashSet<String> {
    raw.vertices.iter().filter(|v| q.vertex_index(v).is_none()).cloned().collect()
}

/// Deletes the leaves of a complete quiver.
pub fn prune_complete(full: &BoundQuiver) -> Result<BoundQuiver, QuiverError> {
    let keep: Vec<bool> = (0..full.n_vertices())
        .map(|v| match full.degree(v) {
            1 => Ok(false),
            4 => Ok(true),
            d => Err(QuiverError::NotComplete { vertex: full.vertex_id(v).to_string(), degree: d }),
        })
        .collect::<Result<_, _>>()?;
    Ok(full.induced(&keep))
}

/// The pruned subquiver.
pub fn prune(bq: &BlossomQuiver) -> BoundQuiver {
    bq.base.clone()
}

impl BlossomQuiver {
    fn assemble(base: BoundQuiver, full: BoundQuiver, leaves: &HashSet<String>) -> Self {
        let leaf: Vec<bool> = full.vertices().iter().map(|v| leaves.contains(v)).collect();
        let blossom_arrow = (0..full.n_arrows())
            .map(|a| leaf[full.src(a)] || leaf[full.tgt(a)])
            .collect();
        let base_vertex = full.vertices().iter().map(|v| base.vertex_index(v)).collect();
        let nbr = (0..full.n_arrows()).map(|a| full.role_neighbours(a)).collect();
        BlossomQuiver { base, full, leaf, blossom_arrow, base_vertex, nbr }
    }

    /// Reads a complete quiver as a blossoming quiver; its leaves are the blossom vertices.
    pub fn from_complete(full: BoundQuiver) -> Result<Self, QuiverError> {
        let base = prune_complete(&full)?;
        let leaves = (0..full.n_vertices())
            .filter(|&v| full.degree(v) == 1)
            .map(|v| full.vertex_id(v).to_string())
            .collect();
        Ok(Self::assemble(base, full, &leaves))
    }

    pub fn base(&self) -> &BoundQuiver {
        &self.base
    }
    pub fn quiver(&self) -> &BoundQuiver {
        &self.full
    }
    pub fn is_leaf(&self, v: usize) -> bool {
        self.leaf[v]
    }
    pub fn is_blossom_arrow(&self, a: usize) -> bool {
        self.blossom_arrow[a]
    }
    pub fn blossom_vertices(&self) -> Vec<usize> {
        (0..self.full.n_vertices()).filter(|&v| self.leaf[v]).collect()
    }
    pub fn blossom_arrows(&self) -> Vec<usize> {
        (0..self.full.n_arrows()).filter(|&a| self.blossom_arrow[a]).collect()
    }
    /// Index in the base quiver of a non-leaf vertex.
    pub fn base_vertex(&self, v: usize) -> Option<usize> {
        self.base_vertex[v]
    }
    pub fn full_vertex(&self, base_v: usize) -> usize {
        self.full.vertex_index(self.base.vertex_id(base_v)).expect("base vertex survives blossoming")
    }
    pub fn n_letters(&self) -> usize {
        2 * self.full.n_arrows()
    }

    pub fn tail(&self, l: Letter) -> usize {
        if l.is_pos() {
            self.full.src(l.arrow())
        } else {
            self.full.tgt(l.arrow())
        }
    }
    pub fn head(&self, l: Letter) -> usize {
        self.tail(l.inv())
    }

    /// Letter continuing `l` without a bend (same sign), if any.
    pub fn straight_next(&self, l: Letter) -> Option<Letter> {
        let a = l.arrow();
        if l.is_pos() {
            self.nbr[a][NS].map(Letter::pos)
        } else {
            self.nbr[a][NP].map(Letter::neg)
        }
    }
    /// Letter continuing `l` with a bend (opposite sign), if any.
    pub fn bend_next(&self, l: Letter) -> Option<Letter> {
        let a = l.arrow();
        if l.is_pos() {
            self.nbr[a][OI].map(Letter::neg)
        } else {
            self.nbr[a][OO].map(Letter::pos)
        }
    }
    pub fn straight_prev(&self, l: Letter) -> Option<Letter> {
        self.straight_next(l.inv()).map(Letter::inv)
    }
    pub fn bend_prev(&self, l: Letter) -> Option<Letter> {
        self.bend_next(l.inv()).map(Letter::inv)
    }
    /// The legal letters after `l`, straight one first.
    pub fn next_letters(&self, l: Letter) -> Vec<Letter> {
        self.straight_next(l).into_iter().chain(self.bend_next(l)).collect()
    }
    /// Whether `x` may be followed by `y` in a walk.
    pub fn follows(&self, x: Letter, y: Letter) -> bool {
        self.straight_next(x) == Some(y) || self.bend_next(x) == Some(y)
    }

    /// Letters leaving a leaf (exactly one per leaf).
    pub fn leaf_start(&self, v: usize) -> Letter {
        debug_assert!(self.leaf[v]);
        let q = &self.full;
        match q.out_arrows(v).first() {
            Some(&a) => Letter::pos(a),
            None => Letter::neg(q.in_arrows(v)[0]),
        }
    }

    /// Straight oriented cycles, each listed once as positive letters starting at its least arrow.
    pub fn straight_cycles(&self) -> Vec<Vec<Letter>> {
        cycles_of(self.full.n_arrows(), |a| self.nbr[a][NS])
            .into_iter()
            .map(|c| c.into_iter().map(Letter::pos).collect())
            .collect()
    }

    /// Length of the straight cycle through `l`, if it lies on one.
    pub fn cycle_length(&self, l: Letter) -> Option<usize> {
        let mut x = l;
        for k in 1..=self.n_letters() {
            x = self.straight_next(x)?;
            if x == l {
                return Some(k);
            }
        }
        None
    }

    /// Number of cycles of relation-free successors (`p`).
    pub fn count_straight_cycles(&self) -> usize {
        self.straight_cycles().len()
    }
}

/// Cycles of a partial injective map on `0..n`, each rotated to start at its minimum.
pub(crate) fn cycles_of(n: usize, f: impl Fn(usize) -> Option<usize>) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut path = vec![s];
        let mut x = s;
        let mut closed = false;
        while let Some(y) = f(x) {
            if y == s {
                closed = true;
                break;
            }
            if seen[y] || path.len() > n {
                break;
            }
            path.push(y);
            x = y;
        }
        if closed {
            for &y in &path {
                seen[y] = true;
            }
            out.push(path);
        }
        seen[s] = true;
    }
    out
}

/// Number of cycles of the related-successor map of `q` (`p` of the Koszul dual).
pub fn count_relation_cycles(q: &BoundQuiver) -> usize {
    cycles_of(q.n_arrows(), |a| q.role_neighbours(a)[1]).len()
}

/// Number of cycles of the relation-free successor map of `q` (`p`).
pub fn count_free_cycles(q: &BoundQuiver) -> usize {
    cycles_of(q.n_arrows(), |a| q.role_neighbours(a)[NS]).len()
}
