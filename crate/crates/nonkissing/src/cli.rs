//! Command line front end. Each subcommand writes a single JSON (or DOT) document.
//!
//! Exit codes: 0 success, 1 unreadable input, 2 invalid input or failed check, 3 a bound was
//! hit (the partial document carries `"closed": false` or `"complete": false`).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::blossom::{blossom, prune, BlossomQuiver};
use crate::complex::{
    brute_force_facets, enumerate_facets, verify_distinguished, verify_purity, verify_thinness,
    walks_through_cycles_check, FlipGraph, Report,
};
use crate::corpus::{builtin, corpus};
use crate::enumerate::{enumerate_walks, walk_set_is_finite, DEFAULT_BODY_BOUND};
use crate::error::QuiverError;
use crate::geometry::{build_associahedron, build_fan};
use crate::kiss::{is_self_kissing, kiss_count_unrolled, KissCount, DEFAULT_UNROLL};
use crate::linalg::rat_text;
use crate::quiver::BoundQuiver;
use crate::surface::{
    curve_of_walk, dual_dissection, invariants, maps_isomorphic, quiver_from_surface, strip, surface_from_blossom,
    swap_dissections, walk_of_curve, SurfaceModel, Which,
};
use crate::vectors::{dual_basis_check, facet_vectors, sign_coherence_check};
use crate::walk::{Walk, WalkKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Dot,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "nonkissing", version, about = "Non-kissing complexes, surfaces and g-vector geometry of locally gentle quivers")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Stop the flip search after this many facets.
    #[arg(long, global = true, default_value_t = 2000, value_parser = positive)]
    pub max_facets: usize,
    /// Longest walk body explored by walk enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_BODY_BOUND, value_parser = positive)]
    pub body_bound: usize,
    /// Extra tail periods unrolled when counting kisses.
    #[arg(long, global = true, default_value_t = DEFAULT_UNROLL, value_parser = positive)]
    pub unroll: usize,
    #[arg(long, global = true, value_enum, default_value_t)]
    pub format: Format,
    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Check the locally gentle conditions.
    Validate { input: String },
    /// The blossoming quiver.
    Blossom { input: String },
    /// The Koszul dual.
    Dual { input: String },
    /// Walks of the blossoming quiver, with their kisses.
    Walks { input: String },
    /// Facets reachable from the peak facet by flips.
    Facets { input: String },
    /// The flip graph.
    Flipgraph { input: String },
    /// g-, c- and d-vectors of every facet.
    Vectors { input: String },
    /// The g-vector fan.
    Fan { input: String },
    /// The associahedron, as vertices and halfspaces.
    Polytope { input: String },
    /// The marked surface and its invariants.
    Surface { input: String },
    /// Quiver to surface and back, Koszul swap, dual dissection and curves.
    Roundtrip { input: String },
    /// Every check on the built-in corpus (at most 200 facets per quiver).
    Selfcheck,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub document: String,
}

enum Fail {
    Parse(String),
    Invalid(String),
    /// A bound was hit; the value is the partial document.
    Bound(Value),
    /// A check failed; the value is the full report.
    Check(Value),
}

impl From<QuiverError> for Fail {
    fn from(e: QuiverError) -> Fail {
        match e {
            QuiverError::Parse(_) => Fail::Parse(e.to_string()),
            _ => Fail::Invalid(e.to_string()),
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> Fail {
    Fail::Invalid(e.to_string())
}

enum Doc {
    Json(Value),
    Dot(String),
}

/// A file path, or `builtin:family:param` (families: cambrian, a, reversed, double, cycle,
/// doublecycle).
pub fn load_quiver(input: &str) -> Result<BoundQuiver, QuiverError> {
    if input.starts_with("builtin:") {
        return builtin(input);
    }
    let text = std::fs::read_to_string(input).map_err(|e| QuiverError::Parse(format!("{input}: {e}")))?;
    BoundQuiver::from_json(&text)
}

pub fn run(cfg: &RunConfig) -> Outcome {
    let (code, doc) = match dispatch(cfg) {
        Ok(doc) => (0, doc),
        Err(Fail::Parse(e)) => (1, Doc::Json(json!({ "error": e }))),
        Err(Fail::Invalid(e)) => (2, Doc::Json(json!({ "error": e }))),
        Err(Fail::Check(v)) => (2, Doc::Json(v)),
        Err(Fail::Bound(v)) => (3, Doc::Json(v)),
    };
    let document = match doc {
        Doc::Json(v) => serde_json::to_string_pretty(&v).expect("json renders") + "\n",
        Doc::Dot(s) => s,
    };
    Outcome { code, document }
}

/// Parses arguments, runs, writes the document and returns the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let out = run(&cfg);
    match &cfg.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &out.document) {
                eprintln!("cannot write {}: {e}", path.display());
                return 1;
            }
        }
        None => {
            use std::io::Write;
            let _ = std::io::stdout().write_all(out.document.as_bytes());
        }
    }
    out.code
}

fn dispatch(cfg: &RunConfig) -> Result<Doc, Fail> {
    let input = match &cfg.command {
        Command::Selfcheck => return selfcheck(cfg).map(Doc::Json),
        Command::Validate { input }
        | Command::Blossom { input }
        | Command::Dual { input }
        | Command::Walks { input }
        | Command::Facets { input }
        | Command::Flipgraph { input }
        | Command::Vectors { input }
        | Command::Fan { input }
        | Command::Polytope { input }
        | Command::Surface { input }
        | Command::Roundtrip { input } => input,
    };
    let q = load_quiver(input)?;
    let dot = cfg.format == Format::Dot;
    let no_dot = |what: &str| Fail::Parse(format!("no DOT rendering for {what}"));
    match &cfg.command {
        Command::Validate { .. } => Ok(if dot {
            Doc::Dot(quiver_dot(&q, &[]))
        } else {
            Doc::Json(json!({
                "valid": true,
                "vertices": q.n_vertices(),
                "arrows": q.n_arrows(),
                "relations": q.relations().len(),
                "quiver": q.to_raw(),
            }))
        }),
        Command::Blossom { .. } => {
            let bq = blossom(&q);
            let full = bq.quiver();
            if dot {
                return Ok(Doc::Dot(quiver_dot(full, &bq.blossom_vertices())));
            }
            Ok(Doc::Json(json!({
                "quiver": full.to_raw(),
                "vertices": full.n_vertices(),
                "arrows": full.n_arrows(),
                "blossom_vertices": bq.blossom_vertices().iter().map(|&v| full.vertex_id(v)).collect::<Vec<_>>(),
                "blossom_arrows": bq.blossom_arrows().iter().map(|&a| full.arrow_id(a)).collect::<Vec<_>>(),
                "pruned_is_input": prune(&bq) == q,
            })))
        }
        Command::Dual { .. } => {
            let k = q.koszul_dual();
            if dot {
                return Ok(Doc::Dot(quiver_dot(&k, &[])));
            }
            Ok(Doc::Json(json!({ "quiver": k.to_raw(), "involution": k.koszul_dual() == q })))
        }
        Command::Walks { .. } => {
            if dot {
                return Err(no_dot("walks"));
            }
            walks_doc(cfg, &blossom(&q)).map(Doc::Json)
        }
        Command::Facets { .. } => {
            if dot {
                return Err(no_dot("facets"));
            }
            let bq = blossom(&q);
            let g = enumerate_facets(&bq, cfg.max_facets).map_err(invalid)?;
            let doc = json!({
                "facets": g.facets.len(),
                "closed": g.closed,
                "scope": "reachable from the peak facet",
                "walks": g.facets.iter().map(|f| f.texts(&bq)).collect::<Vec<_>>(),
            });
            bounded(g.closed, doc).map(Doc::Json)
        }
        Command::Flipgraph { .. } => {
            let bq = blossom(&q);
            let g = enumerate_facets(&bq, cfg.max_facets).map_err(invalid)?;
            if dot {
                return if g.closed { Ok(Doc::Dot(g.to_dot(&bq))) } else { Err(Fail::Bound(json!({ "closed": false }))) };
            }
            let doc = json!({
                "facets": g.facets.len(),
                "closed": g.closed,
                "edges": g.edges.iter().map(|e| json!({
                    "from": e.from,
                    "to": e.to,
                    "old": e.old.to_text(&bq),
                    "new": e.new.to_text(&bq),
                    "increasing": e.increasing,
                })).collect::<Vec<_>>(),
            });
            bounded(g.closed, doc).map(Doc::Json)
        }
        Command::Vectors { .. } => {
            if dot {
                return Err(no_dot("vectors"));
            }
            let bq = blossom(&q);
            let g = enumerate_facets(&bq, cfg.max_facets).map_err(invalid)?;
            vectors_doc(&bq, &g).map(Doc::Json)
        }
        Command::Fan { .. } => {
            if dot {
                return Err(no_dot("fan"));
            }
            fan_doc(cfg, &blossom(&q)).map(Doc::Json)
        }
        Command::Polytope { .. } => {
            if dot {
                return Err(no_dot("polytope"));
            }
            polytope_doc(cfg, &blossom(&q)).map(Doc::Json)
        }
        Command::Surface { .. } => {
            let bq = blossom(&q);
            let s = surface_from_blossom(&bq);
            if dot {
                return Ok(Doc::Dot(surface_dot(&s)));
            }
            let inv = invariants(&s).map_err(invalid)?;
            Ok(Doc::Json(json!({
                "b": inv.b,
                "punctures": inv.p + inv.p_dual,
                "p": inv.p,
                "p_dual": inv.p_dual,
                "genus": inv.genus,
                "euler": inv.euler,
                "components": inv.components,
                "d_faces": inv.d_faces,
                "map": s.to_json_value(),
            })))
        }
        Command::Roundtrip { .. } => {
            if dot {
                return Err(no_dot("roundtrip"));
            }
            let checks = roundtrip_checks(&q, cfg.body_bound);
            let doc = Value::Object(checks.iter().map(|(k, v)| (k.to_string(), json!(v))).collect());
            if checks.values().all(|v| v == "ok" || v.starts_with("skipped")) {
                Ok(Doc::Json(doc))
            } else {
                Err(Fail::Check(doc))
            }
        }
        Command::Selfcheck => unreachable!(),
    }
}

fn bounded(closed: bool, doc: Value) -> Result<Value, Fail> {
    if closed {
        Ok(doc)
    } else {
        Err(Fail::Bound(doc))
    }
}

fn kind_name(w: &Walk) -> &'static str {
    match w.kind() {
        WalkKind::Bending => "bending",
        WalkKind::FiniteStraight => "finite straight",
        WalkKind::InfiniteStraight => "infinite straight",
    }
}

fn count_value(k: KissCount) -> Value {
    match k {
        KissCount::Finite(n) => json!(n),
        KissCount::Infinite => json!("infinite"),
    }
}

/// Pairwise kisses are only listed for sets up to this size.
const KISS_TABLE_LIMIT: usize = 200;

fn walks_doc(cfg: &RunConfig, bq: &BlossomQuiver) -> Result<Value, Fail> {
    let ws = enumerate_walks(bq, cfg.body_bound);
    let walks = &ws.walks;
    let kisses = (walks.len() <= KISS_TABLE_LIMIT).then(|| {
        let mut out = vec![];
        for (i, x) in walks.iter().enumerate() {
            for (j, y) in walks.iter().enumerate() {
                let k = kiss_count_unrolled(bq, x, y, cfg.unroll);
                if !k.is_zero() {
                    out.push(json!({ "walk": i, "kisses": j, "count": count_value(k) }));
                }
            }
        }
        out
    });
    let doc = json!({
        "complete": ws.complete,
        "finite": walk_set_is_finite(bq),
        "count": walks.len(),
        "walks": walks.iter().map(|w| json!({
            "walk": w.to_text(bq),
            "kind": kind_name(w),
            "self_kissing": is_self_kissing(bq, w),
        })).collect::<Vec<_>>(),
        "kisses": kisses,
    });
    bounded(ws.complete, doc)
}

fn report_value(r: &Report) -> Value {
    json!({ "ok": r.ok(), "checked": r.checked, "violations": r.violations })
}

fn vectors_doc(bq: &BlossomQuiver, g: &FlipGraph) -> Result<Value, Fail> {
    let mut facets = vec![];
    for (k, f) in g.facets.iter().enumerate() {
        let fv = facet_vectors(bq, f).map_err(invalid)?;
        facets.push(json!({
            "facet": k,
            "walks": fv.walks.iter().map(|w| w.to_text(bq)).collect::<Vec<_>>(),
            "g": fv.g,
            "c": fv.c,
            "d": fv.d,
        }));
    }
    let doc = json!({
        "closed": g.closed,
        "facets": facets,
        "dual_bases": report_value(&dual_basis_check(bq, &g.facets)),
        "sign_coherence": report_value(&sign_coherence_check(bq, &g.facets)),
    });
    bounded(g.closed, doc)
}

fn fan_doc(cfg: &RunConfig, bq: &BlossomQuiver) -> Result<Value, Fail> {
    let g = enumerate_facets(bq, cfg.max_facets).map_err(invalid)?;
    if !g.closed {
        return Err(Fail::Bound(json!({ "closed": false, "facets": g.facets.len() })));
    }
    let fan = build_fan(bq, &g).map_err(invalid)?;
    Ok(json!({
        "closed": true,
        "dim": fan.dim,
        "rays": fan.rays,
        "cones": fan.cones,
        "walls": fan.walls.iter().map(|w| json!({ "rays": w.rays, "cones": w.cones })).collect::<Vec<_>>(),
        "complete_simplicial": fan.is_complete_simplicial(),
        "violations": fan.report.violations,
    }))
}

fn polytope_doc(cfg: &RunConfig, bq: &BlossomQuiver) -> Result<Value, Fail> {
    if !walk_set_is_finite(bq) {
        return Err(Fail::Bound(json!({
            "finite": false,
            "complete": false,
            "error": "the quiver has infinitely many walks, so the polytope is not defined",
        })));
    }
    let g = enumerate_facets(bq, cfg.max_facets).map_err(invalid)?;
    if !g.closed {
        return Err(Fail::Bound(json!({ "closed": false, "facets": g.facets.len() })));
    }
    let ws = enumerate_walks(bq, cfg.body_bound);
    if !ws.complete {
        return Err(Fail::Bound(json!({ "complete": false, "walks": ws.walks.len() })));
    }
    let p = build_associahedron(bq, &g, &ws).map_err(invalid)?;
    Ok(json!({
        "closed": true,
        "dim": p.dim,
        "vertices": p.vertices.iter().map(|v| v.iter().map(rat_text).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "halfspaces": p.halfspaces.iter().map(|h| json!({ "walk": h.walk, "normal": h.normal, "offset": h.offset })).collect::<Vec<_>>(),
        "defining": p.defining,
        "edges": p.edges,
        "violations": p.report.violations,
    }))
}

/// Named checks of the quiver/surface dictionary; values are "ok", "skipped: ..." or a failure.
pub fn roundtrip_checks(q: &BoundQuiver, body_bound: usize) -> BTreeMap<&'static str, String> {
    let verdict = |ok: bool, what: &str| if ok { "ok".to_string() } else { format!("failed: {what}") };
    let mut out = BTreeMap::new();
    let bq = blossom(q);
    let s = surface_from_blossom(&bq);
    out.insert("prune", verdict(prune(&bq) == *q, "pruning the blossom does not give the quiver back"));
    out.insert(
        "quiver_roundtrip",
        match quiver_from_surface(&s, Which::D) {
            Ok(back) => verdict(back == *q || back.is_isomorphic(q), "the quiver of D differs"),
            Err(e) => format!("failed: {e}"),
        },
    );
    out.insert(
        "koszul_dual",
        match quiver_from_surface(&s, Which::DualD) {
            Ok(back) => verdict(back.is_isomorphic(&q.koszul_dual()), "the quiver of D* is not the Koszul dual"),
            Err(e) => format!("failed: {e}"),
        },
    );
    out.insert(
        "koszul_swap",
        match BlossomQuiver::from_complete(bq.quiver().koszul_dual()) {
            Ok(kb) => verdict(maps_isomorphic(&swap_dissections(&s), &surface_from_blossom(&kb), true), "swapped map differs"),
            Err(e) => format!("failed: {e}"),
        },
    );
    out.insert(
        "dual_dissection",
        match dual_dissection(&strip(&s, Which::D)) {
            Ok(r) => verdict(maps_isomorphic(&r, &s, true), "rebuilt map differs"),
            Err(e) => format!("failed: {e}"),
        },
    );
    out.insert("invariants", invariants(&s).map_or_else(|e| format!("failed: {e}"), |_| "ok".into()));
    out.insert("curves", curve_check(&s, &bq, body_bound));
    out
}

/// Curves of walks are read back as the same walks, on at most this many walks.
const CURVE_SAMPLE: usize = 500;

fn curve_check(s: &SurfaceModel, bq: &BlossomQuiver, body_bound: usize) -> String {
    let ws = enumerate_walks(bq, body_bound.min(12));
    for w in ws.walks.iter().take(CURVE_SAMPLE) {
        let back = curve_of_walk(s, bq, w).and_then(|c| walk_of_curve(s, &c));
        match back {
            Ok((_, v)) if &v == w => {}
            Ok((b2, v)) => return format!("failed: {} came back as {}", w.to_text(bq), v.to_text(&b2)),
            Err(e) => return format!("failed: {}: {e}", w.to_text(bq)),
        }
    }
    "ok".into()
}

/// Facet cap of the self-check; every finite complex of the corpus is smaller.
pub const SELFCHECK_FACETS: usize = 200;

fn selfcheck(cfg: &RunConfig) -> Result<Value, Fail> {
    let mut instances = serde_json::Map::new();
    let mut failed = false;
    let capped = RunConfig { max_facets: cfg.max_facets.min(SELFCHECK_FACETS), ..cfg.clone() };
    for (name, q) in corpus() {
        let checks = instance_checks(&capped, &q);
        failed |= checks.values().any(|v| v.starts_with("failed"));
        instances.insert(name, json!(checks));
    }
    let doc = json!({ "ok": !failed, "instances": instances });
    if failed {
        Err(Fail::Check(doc))
    } else {
        Ok(doc)
    }
}

fn from_report(r: &Report) -> String {
    match r.violations.first() {
        None => "ok".into(),
        Some(v) => format!("failed: {v} ({} violations)", r.violations.len()),
    }
}

/// The invariant suite on one quiver.
pub fn instance_checks(cfg: &RunConfig, q: &BoundQuiver) -> BTreeMap<&'static str, String> {
    let mut out = roundtrip_checks(q, cfg.body_bound);
    let bq = blossom(q);
    let (n0, n1) = (q.n_vertices(), q.n_arrows());
    let full = bq.quiver();
    out.insert(
        "blossom_size",
        if full.n_vertices() == 5 * n0 - 2 * n1 && full.n_arrows() == 4 * n0 - n1 {
            "ok".into()
        } else {
            format!("failed: {} vertices and {} arrows", full.n_vertices(), full.n_arrows())
        },
    );
    let k = q.koszul_dual();
    let commutes = BlossomQuiver::from_complete(full.koszul_dual()).is_ok_and(|kb| kb.quiver().is_isomorphic(blossom(&k).quiver()));
    out.insert(
        "koszul",
        if k.koszul_dual() == *q && commutes { "ok".into() } else { "failed: Koszul duality is not an involution commuting with blossoming".into() },
    );
    let g = match enumerate_facets(&bq, cfg.max_facets) {
        Ok(g) => g,
        Err(e) => {
            out.insert("facets", format!("failed: {e}"));
            return out;
        }
    };
    out.insert("purity", from_report(&verify_purity(&bq, &g.facets)));
    out.insert("thinness", from_report(&verify_thinness(&bq, &g)));
    out.insert("distinguished", from_report(&verify_distinguished(&bq, &g.facets)));
    out.insert("cycles", from_report(&walks_through_cycles_check(&bq, &g.facets)));
    out.insert("dual_bases", from_report(&dual_basis_check(&bq, &g.facets)));
    out.insert("sign_coherence", from_report(&sign_coherence_check(&bq, &g.facets)));
    if !g.closed {
        let why = format!("skipped: more than {} facets", cfg.max_facets);
        for key in ["oracle", "fan", "polytope"] {
            out.insert(key, why.clone());
        }
        return out;
    }
    out.insert(
        "oracle",
        match brute_force_facets(&bq, cfg.body_bound) {
            Ok(mut bf) => {
                let mut ours = g.facets.clone();
                bf.sort();
                ours.sort();
                if bf == ours { "ok".into() } else { format!("failed: {} facets by flips, {} cliques", ours.len(), bf.len()) }
            }
            Err(e) => format!("skipped: {e}"),
        },
    );
    out.insert(
        "fan",
        match build_fan(&bq, &g) {
            Ok(f) => from_report(&f.report),
            Err(e) => format!("failed: {e}"),
        },
    );
    out.insert(
        "polytope",
        if !walk_set_is_finite(&bq) {
            "skipped: infinitely many walks".into()
        } else {
            let ws = enumerate_walks(&bq, cfg.body_bound);
            match build_associahedron(&bq, &g, &ws) {
                Ok(p) => from_report(&p.report),
                Err(e) => format!("failed: {e}"),
            }
        },
    );
    out
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn quiver_dot(q: &BoundQuiver, leaves: &[usize]) -> String {
    let mut s = String::from("digraph quiver {\n");
    for v in 0..q.n_vertices() {
        let shape = if leaves.contains(&v) { "point" } else { "circle" };
        s.push_str(&format!("  {} [shape={shape}];\n", dot_id(q.vertex_id(v))));
    }
    for a in 0..q.n_arrows() {
        s.push_str(&format!(
            "  {} -> {} [label={}];\n",
            dot_id(q.vertex_id(q.src(a))),
            dot_id(q.vertex_id(q.tgt(a))),
            dot_id(q.arrow_id(a))
        ));
    }
    for &(a, b) in q.relations() {
        s.push_str(&format!("  // relation {} {}\n", q.arrow_id(a), q.arrow_id(b)));
    }
    s.push_str("}\n");
    s
}

fn surface_dot(s: &SurfaceModel) -> String {
    use crate::surface::{PointKind, Side};
    let mut out = String::from("graph surface {\n");
    for (i, p) in s.points().iter().enumerate() {
        let (colour, shape) = match p.kind {
            PointKind::Green => ("green", "circle"),
            PointKind::Red => ("red", "circle"),
            PointKind::Black => ("black", "point"),
            PointKind::Blossom => ("black", "square"),
        };
        let label = p.label.clone().unwrap_or_default();
        out.push_str(&format!("  p{i} [color={colour}, shape={shape}, label={}];\n", dot_id(&label)));
    }
    for d in 0..s.n_darts() {
        let t = s.twin(d);
        if d < t {
            let boundary = s.side(d) == Side::Hole || s.side(t) == Side::Hole;
            let colour = if s.side(d) == Side::Red || s.side(t) == Side::Red { "red" } else { "green" };
            let style = if boundary { format!("color={colour}, penwidth=2") } else { format!("color={colour}") };
            out.push_str(&format!("  p{} -- p{} [{style}];\n", s.tail(d), s.head(d)));
        }
    }
    out.push_str("}\n");
    out
}
