//! Built-in families of locally gentle quivers.

use crate::error::QuiverError;
use crate::quiver::{BoundQuiver, RawArrow, RawQuiver};

fn build(n: usize, arrows: Vec<(String, usize, usize)>, relations: Vec<(String, String)>) -> BoundQuiver {
    let raw = RawQuiver {
        vertices: (1..=n).map(|i| i.to_string()).collect(),
        arrows: arrows
            .into_iter()
            .map(|(id, s, t)| RawArrow { id, src: s.to_string(), tgt: t.to_string() })
            .collect(),
        relations,
    };
    BoundQuiver::from_raw(&raw).expect("corpus quivers are locally gentle")
}

/// Line `1 - 2 - ... - n`; `r` orients an edge rightwards, `l` leftwards. No relations.
pub fn cambrian(orientation: &str) -> Result<BoundQuiver, QuiverError> {
    let n = orientation.chars().count() + 1;
    let mut arrows = vec![];
    for (i, c) in orientation.chars().enumerate() {
        let (s, t) = match c {
            'r' => (i + 1, i + 2),
            'l' => (i + 2, i + 1),
            _ => return Err(QuiverError::Parse(format!("orientation letter {c:?} is not r or l"))),
        };
        arrows.push((format!("a{}", i + 1), s, t));
    }
    Ok(build(n, arrows, vec![]))
}

/// Linearly oriented path on `n` vertices.
pub fn path_a(n: usize) -> BoundQuiver {
    cambrian(&"r".repeat(n.saturating_sub(1))).unwrap()
}

/// `a_i : i -> i+1` and `b_i : i+1 -> i` with both two-cycles in the ideal.
pub fn reversed_path(n: usize) -> BoundQuiver {
    let mut arrows = vec![];
    let mut rel = vec![];
    for i in 1..n {
        arrows.push((format!("a{i}"), i, i + 1));
        arrows.push((format!("b{i}"), i + 1, i));
        rel.push((format!("a{i}"), format!("b{i}")));
        rel.push((format!("b{i}"), format!("a{i}")));
    }
    build(n, arrows, rel)
}

/// Two parallel arrows `a_i, b_i : i -> i+1`, with `a a` and `b b` in the ideal.
pub fn double_path(n: usize) -> BoundQuiver {
    let mut arrows = vec![];
    let mut rel = vec![];
    for i in 1..n {
        arrows.push((format!("a{i}"), i, i + 1));
        arrows.push((format!("b{i}"), i, i + 1));
        if i + 1 < n {
            rel.push((format!("a{i}"), format!("a{}", i + 1)));
            rel.push((format!("b{i}"), format!("b{}", i + 1)));
        }
    }
    build(n, arrows, rel)
}

/// Oriented cycle on `n` vertices without relations (`n = 1` is a loop).
pub fn cycle(n: usize) -> BoundQuiver {
    let arrows = (1..=n).map(|i| (format!("a{i}"), i, i % n + 1)).collect();
    build(n, arrows, vec![])
}

/// Two parallel oriented cycles with `a a` and `b b` in the ideal everywhere.
pub fn double_cycle(n: usize) -> BoundQuiver {
    let mut arrows = vec![];
    let mut rel = vec![];
    for i in 1..=n {
        let j = i % n + 1;
        arrows.push((format!("a{i}"), i, j));
        arrows.push((format!("b{i}"), i, j));
        rel.push((format!("a{i}"), format!("a{j}")));
        rel.push((format!("b{i}"), format!("b{j}")));
    }
    build(n, arrows, rel)
}

/// Resolves `builtin:FAMILY:PARAM`.
pub fn builtin(spec: &str) -> Result<BoundQuiver, QuiverError> {
    let bad = || QuiverError::Parse(format!("unknown builtin {spec:?}"));
    let mut parts = spec.strip_prefix("builtin:").ok_or_else(bad)?.splitn(2, ':');
    let family = parts.next().ok_or_else(bad)?;
    let param = parts.next().ok_or_else(bad)?;
    if family == "cambrian" {
        return cambrian(param);
    }
    let n: usize = param.parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(bad());
    }
    match family {
        "a" => Ok(path_a(n)),
        "reversed" => Ok(reversed_path(n)),
        "double" => Ok(double_path(n)),
        "cycle" => Ok(cycle(n)),
        "doublecycle" => Ok(double_cycle(n)),
        _ => Err(bad()),
    }
}

/// The corpus used by the self-check: every family at small sizes.
pub fn corpus() -> Vec<(String, BoundQuiver)> {
    let mut out = vec![];
    for o in ["r", "rr", "rl", "lr", "rrl", "rlr", "rrrr", "rlrl"] {
        out.push((format!("cambrian:{o}"), cambrian(o).unwrap()));
    }
    for n in 1..=4 {
        out.push((format!("reversed:{n}"), reversed_path(n)));
    }
    for n in 1..=5 {
        out.push((format!("double:{n}"), double_path(n)));
    }
    for n in 1..=5 {
        out.push((format!("cycle:{n}"), cycle(n)));
    }
    for n in 1..=5 {
        out.push((format!("doublecycle:{n}"), double_cycle(n)));
    }
    out
}
