//! Bound quivers with length-two relations.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::QuiverError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawArrow {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

/// Wire format. Field order is alphabetical so serialization is key-sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawQuiver {
    pub arrows: Vec<RawArrow>,
    #[serde(default)]
    pub relations: Vec<(String, String)>,
    pub vertices: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// A validated locally gentle bound quiver.
///
/// Vertices and arrows are kept sorted by id; relations are pairs of arrow indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundQuiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    relations: BTreeSet<(usize, usize)>,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
}

pub(crate) fn check_id(id: &str) -> Result<(), QuiverError> {
    if id.is_empty() || id.chars().any(|c| c.is_whitespace() || matches!(c, '(' | ')' | '|')) {
        return Err(QuiverError::BadId(id.to_string()));
    }
    Ok(())
}

impl BoundQuiver {
    /// Builds without the gentleness checks (degrees, branching). Ids and references are checked.
    pub(crate) fn build_unchecked(raw: &RawQuiver) -> Result<Self, QuiverError> {
        let mut vertices = raw.vertices.clone();
        for v in &vertices {
            check_id(v)?;
        }
        vertices.sort();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(QuiverError::DuplicateVertex(w[0].clone()));
        }
        let vertex_index: HashMap<String, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();

        let mut raw_arrows = raw.arrows.clone();
        raw_arrows.sort_by(|a, b| a.id.cmp(&b.id));
        let mut arrows = Vec::with_capacity(raw_arrows.len());
        for (i, a) in raw_arrows.iter().enumerate() {
            check_id(&a.id)?;
            if i > 0 && raw_arrows[i - 1].id == a.id {
                return Err(QuiverError::DuplicateArrow(a.id.clone()));
            }
            let look = |v: &String| {
                vertex_index.get(v).copied().ok_or_else(|| QuiverError::UnknownVertex {
                    arrow: a.id.clone(),
                    vertex: v.clone(),
                })
            };
            arrows.push(Arrow { id: a.id.clone(), src: look(&a.src)?, tgt: look(&a.tgt)? });
        }
        let arrow_index: HashMap<String, usize> =
            arrows.iter().enumerate().map(|(i, a)| (a.id.clone(), i)).collect();

        let mut relations = BTreeSet::new();
        for (x, y) in &raw.relations {
            let a = *arrow_index.get(x).ok_or_else(|| QuiverError::UnknownArrow(x.clone()))?;
            let b = *arrow_index.get(y).ok_or_else(|| QuiverError::UnknownArrow(y.clone()))?;
            if arrows[a].tgt != arrows[b].src {
                return Err(QuiverError::NonComposableRelation { first: x.clone(), second: y.clone() });
            }
            if !relations.insert((a, b)) {
                return Err(QuiverError::DuplicateRelation(x.clone(), y.clone()));
            }
        }
        Ok(BoundQuiver { vertices, arrows, relations, vertex_index, arrow_index })
    }

    /// Parses and validates the three locally gentle conditions.
    pub fn from_raw(raw: &RawQuiver) -> Result<Self, QuiverError> {
        let q = Self::build_unchecked(raw)?;
        q.check_gentle()?;
        Ok(q)
    }

    pub fn from_json(text: &str) -> Result<Self, QuiverError> {
        let raw: RawQuiver = serde_json::from_str(text).map_err(|e| QuiverError::Parse(e.to_string()))?;
        Self::from_raw(&raw)
    }

    fn check_gentle(&self) -> Result<(), QuiverError> {
        for v in 0..self.vertices.len() {
            let (i, o) = (self.in_arrows(v).len(), self.out_arrows(v).len());
            if i > 2 || o > 2 {
                return Err(QuiverError::DegreeViolation {
                    vertex: self.vertices[v].clone(),
                    incoming: i,
                    outgoing: o,
                });
            }
        }
        for b in 0..self.arrows.len() {
            let id = &self.arrows[b].id;
            let preds = self.in_arrows(self.arrows[b].src);
            let rel = preds.iter().filter(|&&a| self.is_relation(a, b)).count();
            let free = preds.len() - rel;
            if rel > 1 {
                return Err(QuiverError::GentleBranchViolation {
                    arrow: id.clone(),
                    detail: "two predecessors in relation".into(),
                });
            }
            if free > 1 {
                return Err(QuiverError::GentleBranchViolation {
                    arrow: id.clone(),
                    detail: "two relation-free predecessors".into(),
                });
            }
            let succs = self.out_arrows(self.arrows[b].tgt);
            let rel = succs.iter().filter(|&&c| self.is_relation(b, c)).count();
            let free = succs.len() - rel;
            if rel > 1 {
                return Err(QuiverError::GentleBranchViolation {
                    arrow: id.clone(),
                    detail: "two successors in relation".into(),
                });
            }
            if free > 1 {
                return Err(QuiverError::GentleBranchViolation {
                    arrow: id.clone(),
                    detail: "two relation-free successors".into(),
                });
            }
        }
        Ok(())
    }

    pub fn to_raw(&self) -> RawQuiver {
        RawQuiver {
            arrows: self
                .arrows
                .iter()
                .map(|a| RawArrow {
                    id: a.id.clone(),
                    src: self.vertices[a.src].clone(),
                    tgt: self.vertices[a.tgt].clone(),
                })
                .collect(),
            relations: {
                let mut r: Vec<(String, String)> = self
                    .relations
                    .iter()
                    .map(|&(a, b)| (self.arrows[a].id.clone(), self.arrows[b].id.clone()))
                    .collect();
                r.sort();
                r
            },
            vertices: self.vertices.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("quiver serializes")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn relations(&self) -> &BTreeSet<(usize, usize)> {
        &self.relations
    }
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }
    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }
    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v]
    }
    pub fn arrow_id(&self, a: usize) -> &str {
        &self.arrows[a].id
    }
    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }
    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrow_index.get(id).copied()
    }
    pub fn src(&self, a: usize) -> usize {
        self.arrows[a].src
    }
    pub fn tgt(&self, a: usize) -> usize {
        self.arrows[a].tgt
    }
    pub fn is_relation(&self, a: usize, b: usize) -> bool {
        self.relations.contains(&(a, b))
    }
    pub fn in_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].tgt == v).collect()
    }
    pub fn out_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].src == v).collect()
    }
    /// Number of arrow ends at `v`; a loop counts twice.
    pub fn degree(&self, v: usize) -> usize {
        self.in_arrows(v).len() + self.out_arrows(v).len()
    }

    /// Opposite quiver with complemented length-two relations.
    pub fn koszul_dual(&self) -> BoundQuiver {
        let mut relations = BTreeSet::new();
        for a in 0..self.arrows.len() {
            for b in self.out_arrows(self.arrows[a].tgt) {
                if !self.is_relation(a, b) {
                    relations.insert((b, a));
                }
            }
        }
        BoundQuiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { id: a.id.clone(), src: a.tgt, tgt: a.src })
                .collect(),
            relations,
            vertex_index: self.vertex_index.clone(),
            arrow_index: self.arrow_index.clone(),
        }
    }

    /// Copy with `keep` vertices only (and arrows between them).
    pub(crate) fn induced(&self, keep: &[bool]) -> BoundQuiver {
        let raw = self.to_raw();
        let kept: HashSet<&str> =
            (0..self.vertices.len()).filter(|&v| keep[v]).map(|v| self.vertices[v].as_str()).collect();
        let arrows: Vec<RawArrow> = raw
            .arrows
            .into_iter()
            .filter(|a| kept.contains(a.src.as_str()) && kept.contains(a.tgt.as_str()))
            .collect();
        let ids: HashSet<&str> = arrows.iter().map(|a| a.id.as_str()).collect();
        let relations = raw
            .relations
            .iter()
            .filter(|(x, y)| ids.contains(x.as_str()) && ids.contains(y.as_str()))
            .cloned()
            .collect();
        let vertices = raw.vertices.iter().filter(|v| kept.contains(v.as_str())).cloned().collect();
        BoundQuiver::build_unchecked(&RawQuiver { arrows, relations, vertices }).expect("sub-quiver is well formed")
    }

    pub(crate) fn role_neighbours(&self, x: usize) -> [Option<usize>; 6] {
        let (s, t) = (self.arrows[x].src, self.arrows[x].tgt);
        let mut out = [None; 6];
        for y in self.out_arrows(t) {
            if self.is_relation(x, y) {
                out[1] = Some(y);
            } else {
                out[0] = Some(y);
            }
        }
        for w in self.in_arrows(s) {
            if self.is_relation(w, x) {
                out[3] = Some(w);
            } else {
                out[2] = Some(w);
            }
        }
        out[4] = self.in_arrows(t).into_iter().find(|&y| y != x);
        out[5] = self.out_arrows(s).into_iter().find(|&y| y != x);
        out
    }

    /// Isomorphism invariant: equal codes iff isomorphic as bound quivers.
    ///
    /// Each arrow has at most one neighbour per role (relation-free successor, related
    /// successor, the two predecessor kinds, other arrow into its target, other arrow out of
    /// its source), so a traversal from a root arrow is canonical. Minimise over roots per
    /// component.
    pub fn iso_code(&self) -> IsoCode {
        let m = self.arrows.len();
        let nb: Vec<[Option<usize>; 6]> = (0..m).map(|x| self.role_neighbours(x)).collect();
        let mut comp = vec![usize::MAX; m];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for r in 0..m {
            if comp[r] != usize::MAX {
                continue;
            }
            let c = comps.len();
            let mut stack = vec![r];
            comp[r] = c;
            let mut members = vec![];
            while let Some(x) = stack.pop() {
                members.push(x);
                for y in nb[x].iter().flatten() {
                    if comp[*y] == usize::MAX {
                        comp[*y] = c;
                        stack.push(*y);
                    }
                }
            }
            comps.push(members);
        }
        let mut codes: Vec<Vec<u32>> = comps
            .iter()
            .map(|members| {
                members
                    .iter()
                    .map(|&root| {
                        let mut idx = HashMap::new();
                        let mut order = vec![root];
                        idx.insert(root, 0u32);
                        let mut k = 0;
                        while k < order.len() {
                            let x = order[k];
                            for y in nb[x].iter().flatten() {
                                if !idx.contains_key(y) {
                                    idx.insert(*y, order.len() as u32);
                                    order.push(*y);
                                }
                            }
                            k += 1;
                        }
                        order
                            .iter()
                            .flat_map(|&x| nb[x].iter().map(|y| y.map_or(u32::MAX, |y| idx[&y])).collect::<Vec<_>>())
                            .collect::<Vec<u32>>()
                    })
                    .min()
                    .expect("non-empty component")
            })
            .collect();
        codes.sort();
        let isolated = (0..self.vertices.len()).filter(|&v| self.degree(v) == 0).count();
        IsoCode { components: codes, isolated }
    }

    pub fn is_isomorphic(&self, other: &BoundQuiver) -> bool {
        self.n_vertices() == other.n_vertices()
            && self.n_arrows() == other.n_arrows()
            && self.relations.len() == other.relations.len()
            && self.iso_code() == other.iso_code()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoCode {
    components: Vec<Vec<u32>>,
    isolated: usize,
}

/// Validates a raw description; the operation behind the `validate` subcommand.
pub fn validate_locally_gentle(raw: &RawQuiver) -> Result<BoundQuiver, QuiverError> {
    BoundQuiver::from_raw(raw)
}

/// Convenience builder used by the corpus and tests.
pub fn quiver(vertices: &[&str], arrows: &[(&str, &str, &str)], relations: &[(&str, &str)]) -> Result<BoundQuiver, QuiverError> {
    BoundQuiver::from_raw(&RawQuiver {
        vertices: vertices.iter().map(|s| s.to_string()).collect(),
        arrows: arrows
            .iter()
            .map(|(id, s, t)| RawArrow { id: id.to_string(), src: s.to_string(), tgt: t.to_string() })
            .collect(),
        relations: relations.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_is_valid() {
        let q = quiver(&["1", "2"], &[("a", "1", "2")], &[]).unwrap();
        assert_eq!(q.n_vertices(), 2);
        assert_eq!(q.n_arrows(), 1);
    }

    #[test]
    fn loop_is_valid() {
        assert!(quiver(&["1"], &[("c", "1", "1")], &[]).is_ok());
    }

    #[test]
    fn three_outgoing_is_degree_violation() {
        let e = quiver(&["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "1", "3"), ("c", "1", "4")], &[]).unwrap_err();
        assert!(matches!(e, QuiverError::DegreeViolation { ref vertex, outgoing: 3, .. } if vertex == "1"));
    }

    #[test]
    fn two_free_successors_rejected() {
        let e = quiver(&["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "2", "4")], &[]).unwrap_err();
        assert!(matches!(e, QuiverError::GentleBranchViolation { ref arrow, .. } if arrow == "a"));
    }

    #[test]
    fn non_composable_relation_rejected() {
        let e = quiver(&["1", "2", "3"], &[("a", "1", "2"), ("b", "1", "3")], &[("a", "b")]).unwrap_err();
        assert!(matches!(e, QuiverError::NonComposableRelation { .. }));
    }

    #[test]
    fn json_is_byte_stable() {
        let text = r#"{"vertices":["2","1"],"arrows":[{"tgt":"2","src":"1","id":"a"}],"relations":[]}"#;
        let q = BoundQuiver::from_json(text).unwrap();
        let once = q.to_json();
        assert_eq!(BoundQuiver::from_json(&once).unwrap().to_json(), once);
        assert!(once.find("\"arrows\"").unwrap() < once.find("\"vertices\"").unwrap());
    }

    #[test]
    fn unknown_fields_rejected() {
        let text = r#"{"vertices":[],"arrows":[],"relations":[],"extra":1}"#;
        assert!(matches!(BoundQuiver::from_json(text), Err(QuiverError::Parse(_))));
    }

    #[test]
    fn loop_dual_relates_the_loop() {
        let q = quiver(&["1"], &[("c", "1", "1")], &[]).unwrap();
        let d = q.koszul_dual();
        assert!(d.is_relation(0, 0));
        assert_eq!(d.koszul_dual(), q);
    }

    #[test]
    fn isomorphism_ignores_labels() {
        let q1 = quiver(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[("a", "b")]).unwrap();
        let q2 = quiver(&["x", "y", "z"], &[("p", "y", "z"), ("q", "x", "y")], &[("q", "p")]).unwrap();
        let q3 = quiver(&["x", "y", "z"], &[("p", "y", "z"), ("q", "x", "y")], &[]).unwrap();
        assert!(q1.is_isomorphic(&q2));
        assert!(!q1.is_isomorphic(&q3));
        let q4 = quiver(&["1", "2", "3"], &[("a", "1", "2"), ("b", "3", "2")], &[]).unwrap();
        assert!(!q3.is_isomorphic(&q4));
    }
}
