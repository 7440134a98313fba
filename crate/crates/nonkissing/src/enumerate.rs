//! Depth-first enumeration of walks.

use std::collections::BTreeSet;

use crate::blossom::BlossomQuiver;
use crate::kiss::{is_self_kissing, partial_self_kisses};
use crate::walk::{Letter, Walk};

pub const DEFAULT_BODY_BOUND: usize = 40;
/// Search steps before an enumeration gives up and reports itself incomplete.
pub const MAX_STEPS: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkSet {
    pub walks: Vec<Walk>,
    /// No branch was cut by the body bound.
    pub complete: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    All,
    NonKissing,
}

struct Dfs<'a> {
    bq: &'a BlossomQuiver,
    bound: usize,
    mode: Mode,
    found: BTreeSet<Walk>,
    complete: bool,
    steps: usize,
}

impl Dfs<'_> {
    fn emit(&mut self, left: &[Letter], body: &[Letter], right: &[Letter]) {
        let raw = Walk { left: left.to_vec(), body: body.to_vec(), right: right.to_vec() };
        let w = Walk::canonicalize(self.bq, &raw).expect("enumerated words are walks");
        if self.mode == Mode::NonKissing && is_self_kissing(self.bq, &w) {
            return;
        }
        self.found.insert(w);
    }

    fn straight_suffix(&self, word: &[Letter]) -> usize {
        let mut s = 1;
        while s < word.len() && self.bq.straight_next(word[word.len() - s - 1]) == Some(word[word.len() - s]) {
            s += 1;
        }
        s
    }

    fn extend(&mut self, left: &[Letter], word: &mut Vec<Letter>) {
        self.steps += 1;
        if self.steps > MAX_STEPS {
            self.complete = false;
            return;
        }
        let l = *word.last().unwrap();
        if self.bq.is_leaf(self.bq.head(l)) {
            self.emit(left, word, &[]);
            return;
        }
        let s = self.straight_suffix(word);
        let r = self.bq.cycle_length(l);
        if r == Some(s) {
            let cut = word.len() - s;
            self.emit(left, &word[..cut], &word[cut..]);
            if self.mode == Mode::NonKissing {
                return;
            }
        }
        for n in self.bq.next_letters(l) {
            let finishing_lap = r.is_some_and(|r| s < r) && Some(n) == self.bq.straight_next(l);
            if word.len() >= self.bound && !finishing_lap {
                self.complete = false;
                continue;
            }
            word.push(n);
            if self.mode == Mode::All || !partial_self_kisses(self.bq, left, word) {
                self.extend(left, word);
            }
            word.pop();
        }
    }

    fn run(mut self) -> WalkSet {
        let bq = self.bq;
        for v in bq.blossom_vertices() {
            let mut word = vec![bq.leaf_start(v)];
            self.extend(&[], &mut word);
        }
        for c in bq.straight_cycles() {
            self.emit(&c, &[], &c);
            let back: Vec<Letter> = c.iter().rev().map(|l| l.inv()).collect();
            for dir in [c.clone(), back] {
                for k in 0..dir.len() {
                    let mut tail = dir.clone();
                    tail.rotate_left(k);
                    let bend = bq.bend_next(*tail.last().unwrap()).expect("cycle vertices are complete");
                    let mut word = vec![bend];
                    if self.mode == Mode::All || !partial_self_kisses(bq, &tail, &word) {
                        self.extend(&tail, &mut word);
                    }
                }
            }
        }
        WalkSet { walks: self.found.into_iter().collect(), complete: self.complete }
    }
}

/// The set of walks is finite iff no letter sequence can repeat: a cycle of letters either
/// bends, or is a straight cycle that walks may leave after any number of turns.
pub fn walk_set_is_finite(bq: &BlossomQuiver) -> bool {
    let n = bq.n_letters();
    // 0 unseen, 1 on stack, 2 done
    let mut state = vec![0u8; n];
    for s in 0..n {
        if state[s] != 0 {
            continue;
        }
        let mut stack = vec![(s, 0usize)];
        state[s] = 1;
        while let Some(&mut (x, ref mut k)) = stack.last_mut() {
            let next = bq.next_letters(Letter(x as u32));
            if *k < next.len() {
                let y = next[*k].0 as usize;
                *k += 1;
                match state[y] {
                    0 => {
                        state[y] = 1;
                        stack.push((y, 0));
                    }
                    1 => return false,
                    _ => {}
                }
            } else {
                state[x] = 2;
                stack.pop();
            }
        }
    }
    true
}

/// All walks whose words stay within `body_bound` letters before a tail or blossom end. The set
/// is complete only when no branch had to be cut.
pub fn enumerate_walks(bq: &BlossomQuiver, body_bound: usize) -> WalkSet {
    Dfs { bq, bound: body_bound.max(1), mode: Mode::All, found: BTreeSet::new(), complete: true, steps: 0 }.run()
}

/// Walks that do not kiss themselves. Branches are pruned as soon as a prefix kisses itself, and
/// a full turn around a straight cycle can only continue as a tail.
pub fn enumerate_nonkissing_walks(bq: &BlossomQuiver, body_bound: usize) -> WalkSet {
    Dfs { bq, bound: body_bound.max(1), mode: Mode::NonKissing, found: BTreeSet::new(), complete: true, steps: 0 }.run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blossom::blossom;
    use crate::quiver::quiver;

    #[test]
    fn a2_has_eight_walks() {
        let b = blossom(&quiver(&["1", "2"], &[("a", "1", "2")], &[]).unwrap());
        let all = enumerate_walks(&b, 10);
        assert!(all.complete);
        assert_eq!(all.walks.len(), 8);
        assert_eq!(enumerate_nonkissing_walks(&b, 10).walks, all.walks);
        assert!(walk_set_is_finite(&b));
    }

    #[test]
    fn loop_is_infinite_but_nonkissing_part_is_finite() {
        let b = blossom(&quiver(&["1"], &[("c", "1", "1")], &[]).unwrap());
        let all = enumerate_walks(&b, 8);
        assert!(!all.complete);
        assert!(!walk_set_is_finite(&b));
        let nk = enumerate_nonkissing_walks(&b, 8);
        assert!(nk.complete);
        assert_eq!(nk.walks.len(), 4);
    }
}
